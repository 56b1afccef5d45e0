#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cgrad/groups.hpp"

using namespace cgrad;

namespace {

using Word = std::vector<long>;

Word reduce(Word w) {
  Word out;
  for (long x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inv(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (long& x : r) x = -x;
  return r;
}

Word cat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return reduce(r);
}

// Nielsen reduction: shorten elements by multiplying with others until no
// move helps. A set generates F_r iff it reduces to a basis of letters.
bool nielsen_generates(std::vector<Word> words, long rank) {
  for (auto& w : words) w = reduce(w);
  for (bool changed = true; changed;) {
    changed = false;
    words.erase(std::remove_if(words.begin(), words.end(), [](const Word& w) { return w.empty(); }), words.end());
    for (std::size_t i = 0; i < words.size() && !changed; ++i)
      for (std::size_t j = 0; j < words.size() && !changed; ++j) {
        if (i == j) continue;
        for (const Word& v : {words[j], inv(words[j])}) {
          for (const Word& cand : {cat(words[i], v), cat(v, words[i])}) {
            if (cand.size() < words[i].size()) {
              words[i] = cand;
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
      }
  }
  std::vector<bool> have(static_cast<std::size_t>(rank + 1), false);
  for (const auto& w : words)
    if (w.size() == 1) have[static_cast<std::size_t>(std::labs(w[0]))] = true;
  for (long k = 1; k <= rank; ++k)
    if (!have[static_cast<std::size_t>(k)]) return false;
  return true;
}

GroupElement free_word(const Group& f, const Word& w) {
  FormalWord fw;
  for (long x : w) fw.emplace_back(static_cast<std::size_t>(std::labs(x) - 1), x > 0 ? 1 : -1);
  return f.normalize(fw);
}

std::vector<Group> sample_groups() {
  return {Group::trivial(),
          Group::cyclic(4),
          Group::finite_abelian({2, 2}),
          Group::finite_abelian({2, 6}),
          Group::from_permutations({{1, 0, 2}, {1, 2, 0}}),
          Group::free(1),
          Group::free(3),
          Group::free_product_cyclic({2, 2}),
          Group::free_product_cyclic({3, 0, 2}),
          Group::direct_product({Group::free(1), Group::cyclic(2)}),
          Group::direct_product({Group::free_product_cyclic({2, 2}), Group::cyclic(6), Group::cyclic(4)})};
}

FormalWord random_word(const Group& g, std::mt19937& rng, int len) {
  FormalWord w;
  if (g.generators().empty()) return w;
  std::uniform_int_distribution<std::size_t> gen(0, g.generators().size() - 1);
  std::uniform_int_distribution<long> exp(-3, 3);
  for (int i = 0; i < len; ++i) w.emplace_back(gen(rng), exp(rng));
  return w;
}

}  // namespace

TEST(Normalize, Examples) {
  Group f2 = Group::free(2);
  EXPECT_EQ(f2.normalize({{0, 1}, {0, -1}, {1, 1}}).to_string(), "s2");

  Group d = Group::free_product_cyclic({2, 2});
  EXPECT_EQ(d.normalize({{0, 1}, {1, 1}, {0, 1}, {0, 1}, {1, 1}}).to_string(), "a");

  Group c4 = Group::cyclic(4);
  EXPECT_EQ(c4.normalize({{0, 5}}).to_string(), "t");

  EXPECT_THROW(c4.normalize({{1, 1}}), Error);
  try {
    f2.parse("s3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_generator);
  }
}

TEST(Multiply, Examples) {
  Group k = Group::finite_abelian({2, 2});
  EXPECT_EQ((k.parse("(t,1)") * k.parse("(1,t)")).to_string(), "(t,t)");

  Group z = Group::free(1);
  EXPECT_TRUE((z.parse("s^10") * z.parse("s^-10")).is_identity());

  Group d = Group::free_product_cyclic({2, 2});
  EXPECT_EQ(d.parse("a*b*a").inverse().to_string(), "a*b*a");

  try {
    (void)(z.parse("s") * k.parse("(t,1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::group_mismatch);
  }
}

TEST(Normalize, IdempotentOnRandomWords) {
  std::mt19937 rng(11);
  for (const auto& g : sample_groups()) {
    for (int trial = 0; trial < 40; ++trial) {
      GroupElement a = g.normalize(random_word(g, rng, 6));
      EXPECT_EQ(g.normalize(g.letters(a)), a) << g.name() << " " << a.to_string();
      EXPECT_EQ(g.parse(a.to_string()), a) << g.name() << " " << a.to_string();
    }
  }
}

TEST(Multiply, GroupAxiomsOnRandomElements) {
  std::mt19937 rng(12);
  for (const auto& g : sample_groups()) {
    for (int trial = 0; trial < 40; ++trial) {
      GroupElement a = g.normalize(random_word(g, rng, 5));
      GroupElement b = g.normalize(random_word(g, rng, 5));
      GroupElement c = g.normalize(random_word(g, rng, 5));
      ASSERT_EQ((a * b) * c, a * (b * c)) << g.name();
      ASSERT_TRUE((a.inverse() * a).is_identity()) << g.name();
      ASSERT_EQ(a * g.identity(), a);
    }
  }
}

TEST(Generates, Examples) {
  Group k = Group::finite_abelian({2, 2});
  EXPECT_EQ(generates(k, {k.parse("(t,1)"), k.parse("(1,t)")}), Tri::yes);

  Group c4 = Group::cyclic(4);
  EXPECT_EQ(generates(c4, {c4.parse("t^2")}), Tri::no);

  Group f2 = Group::free(2);
  std::vector<Word> words{{1, 2}, {2}};
  ASSERT_TRUE(nielsen_generates(words, 2));
  EXPECT_EQ(generates(f2, {f2.parse("s1*s2"), f2.parse("s2")}), Tri::yes);
}

TEST(Generates, CanonicalGeneratorsOfEveryKind) {
  for (const auto& g : sample_groups()) EXPECT_EQ(generates(g, g.generators()), Tri::yes) << g.name();
}

TEST(Generates, FreeGroupAgreesWithNielsenOracle) {
  std::mt19937 rng(5);
  Group f2 = Group::free(2);
  std::uniform_int_distribution<long> letter(1, 2), sign(0, 1), len(1, 4), count(1, 3);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> words;
    std::vector<GroupElement> elems;
    for (long c = count(rng); c > 0; --c) {
      Word w;
      for (long l = len(rng); l > 0; --l) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
      words.push_back(w);
      elems.push_back(free_word(f2, w));
    }
    // Nielsen reduction decides generation of the whole group exactly.
    bool expected = nielsen_generates(words, 2);
    ASSERT_EQ(generates(f2, elems) == Tri::yes, expected) << trial;
    agree += expected;
  }
  EXPECT_GT(agree, 0);
}

TEST(Generates, NielsenMovesPreserveBases) {
  std::mt19937 rng(9);
  Group f3 = Group::free(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GroupElement> basis = f3.generators();
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    for (int step = 0; step < 6; ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      basis[i] = rng() % 2 ? basis[i] * basis[j] : basis[j].inverse() * basis[i];
    }
    EXPECT_EQ(generates(f3, basis), Tri::yes);
    std::vector<GroupElement> squares;
    for (const auto& b : basis) squares.push_back(b * b);
    EXPECT_EQ(generates(f3, squares), Tri::no);
  }
}

TEST(Generates, FreeProductIsThreeValued) {
  Group d = Group::free_product_cyclic({2, 2});
  EXPECT_EQ(generates(d, {d.parse("a"), d.parse("b")}), Tri::yes);
  EXPECT_EQ(generates(d, {d.parse("a"), d.parse("a*b")}), Tri::yes);
  // abelianization image is the diagonal of C2 x C2
  EXPECT_EQ(generates(d, {d.parse("a*b")}), Tri::no);
  EXPECT_EQ(generates(d, {d.parse("a"), d.parse("b*a*b*a*b")}), Tri::unknown);

  Group z3 = Group::free_product_cyclic({0, 3});
  EXPECT_EQ(generates(z3, {z3.parse("a^2"), z3.parse("a^3"), z3.parse("b^2")}), Tri::yes);
  EXPECT_EQ(generates(z3, {z3.parse("a^2"), z3.parse("b")}), Tri::no);
}

TEST(Surjective, Examples) {
  Group z = Group::free(1), c2 = Group::cyclic(2), k = Group::finite_abelian({2, 2}), c3 = Group::cyclic(3);
  EXPECT_EQ(is_surjective(Homomorphism::from_images(z, c2, std::vector<std::string>{"t"})), Tri::yes);
  EXPECT_EQ(is_surjective(Homomorphism::from_images(k, c2, std::vector<std::string>{"t", "1"})), Tri::yes);
  EXPECT_EQ(is_surjective(Homomorphism::from_images(c3, c3, std::vector<std::string>{"1"})), Tri::no);
}

TEST(Homomorphisms, RelationsAreChecked) {
  Group c2 = Group::cyclic(2), c3 = Group::cyclic(3), c6 = Group::cyclic(6);
  try {
    Homomorphism::from_images(c2, c3, std::vector<std::string>{"t"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_homomorphism);
  }
  auto h = Homomorphism::from_images(c6, c3, std::vector<std::string>{"t^2"});
  EXPECT_EQ(h(c6.parse("t^5")).to_string(), "t");

  Group d = Group::free_product_cyclic({2, 2});
  EXPECT_THROW(Homomorphism::from_images(d, c3, std::vector<std::string>{"t", "1"}), Error);
  auto q = Homomorphism::from_images(d, c2, std::vector<std::string>{"t", "1"});
  EXPECT_EQ(q(d.parse("a*b*a")).to_string(), "1");

  Group s3 = Group::from_permutations({{1, 0, 2}, {1, 2, 0}});
  // S3 -> C2 sign map: the transposition goes to t, the 3-cycle to 1.
  std::vector<GroupElement> images;
  for (const auto& g : s3.generators()) images.push_back(element_order(g) == 2 ? c2.parse("t") : c2.identity());
  EXPECT_NO_THROW(Homomorphism::from_images(s3, c2, images));
  std::vector<GroupElement> bad(s3.generators().size(), c3.parse("t"));
  EXPECT_THROW(Homomorphism::from_images(s3, c3, bad), Error);

  Group zc2 = Group::direct_product({Group::free(1), c2});
  Group k = Group::finite_abelian({2, 2});
  EXPECT_NO_THROW(Homomorphism::from_images(zc2, k, std::vector<std::string>{"(t,1)", "(1,t)"}));
  EXPECT_THROW(Homomorphism::from_images(zc2, d, std::vector<std::string>{"a", "b"}), Error);
}

TEST(Homomorphisms, ComposeAndProject) {
  Group z = Group::free(1), c2 = Group::cyclic(2), c4 = Group::cyclic(4);
  Group p = Group::direct_product({z, c4});
  auto pr = Homomorphism::projection(p, 1);
  auto q = Homomorphism::from_images(c4, c2, std::vector<std::string>{"t"});
  auto h = Homomorphism::compose(q, pr);
  EXPECT_EQ(h(p.parse("[s^3, t^3]")).to_string(), "t");
  EXPECT_EQ(h.generator_images().size(), 2u);
  EXPECT_THROW(Homomorphism::compose(pr, q), Error);
}

TEST(FiniteGroups, OrdersAndInvariants) {
  Group s3 = Group::from_permutations({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(is_abelian(s3));
  EXPECT_EQ(s3.name(), "finite group of order 6");

  // C2 x C4 realized by permutations of 6 points
  Group g = Group::from_permutations({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(abelian_invariants(g), (std::vector<long>{2, 4}));
  EXPECT_EQ(g.name(), "C2 x C4");
  EXPECT_EQ(isomorphism_class(g), isomorphism_class(Group::finite_abelian({2, 4})));
  EXPECT_NE(isomorphism_class(g), isomorphism_class(Group::finite_abelian({2, 2, 2})));

  Group p = Group::direct_product({Group::cyclic(4), Group::finite_abelian({2, 2}), Group::cyclic(3)});
  EXPECT_EQ(p.order(), 48u);
  EXPECT_EQ(abelian_invariants(p), (std::vector<long>{2, 2, 12}));

  EXPECT_EQ(element_order(Group::free_product_cyclic({2, 2}).parse("a*b")), 0);
  EXPECT_EQ(element_order(Group::free_product_cyclic({2, 3}).parse("a*b*a")), 3);
  EXPECT_EQ(element_order(Group::cyclic(6).parse("t^2")), 3);

  EXPECT_THROW(Group::finite_table({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(Group::finite_abelian({2, 3}), Error);
}

TEST(Balls, SizesAndOrder) {
  Group f2 = Group::free(2);
  auto b = f2.ball(2);
  EXPECT_EQ(b.size(), 17u);
  EXPECT_EQ(b[1].to_string(), "s1");
  EXPECT_EQ(b[2].to_string(), "s1^-1");
  EXPECT_EQ(Group::free_product_cyclic({2, 2}).ball(3).size(), 7u);
  EXPECT_EQ(Group::direct_product({Group::free(1), Group::cyclic(2)}).ball(2).size(), 10u);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LE(b[i - 1].length(), b[i].length());
}

TEST(Names, Display) {
  EXPECT_EQ(Group::free(1).name(), "Z");
  EXPECT_EQ(Group::free(2).name(), "F2");
  EXPECT_EQ(Group::finite_abelian({2, 2}).name(), "C2 x C2");
  EXPECT_EQ(Group::direct_product({Group::free_product_cyclic({2, 2}), Group::cyclic(6)}).name(),
            "(C2 * C2) x C6");
  EXPECT_EQ(Group::trivial().name(), "1");
}

TEST(Stallings, FoldedGraphShape) {
  Group f2 = Group::free(2);
  auto g = stallings_fold(2, {f2.parse("s1^2"), f2.parse("s2")});
  EXPECT_EQ(g.vertices, 2u);
  EXPECT_FALSE(g.is_full_rose(2));
  auto h = stallings_fold(2, {f2.parse("s1*s2*s1^-1"), f2.parse("s1")});
  EXPECT_TRUE(h.is_full_rose(2));
}
