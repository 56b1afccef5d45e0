#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cgrad/serialize.hpp"

using namespace cgrad;

namespace {

struct Options {
  std::string field = "auto";
  std::size_t radius = 6;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out;
};

// Error codes caused by bad input rather than failed verification.
bool is_usage_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error:
    case ErrorCode::unknown_tag:
    case ErrorCode::unknown_generator:
    case ErrorCode::invalid_argument:
    case ErrorCode::infinite_without_radius:
      return true;
    default:
      return false;
  }
}

std::optional<Field> field_option(const Options& o) {
  if (o.field == "auto") return std::nullopt;
  return Field::parse(o.field);
}

Field field_for_tag(const Options& o, const std::string& tag) {
  auto f = field_option(o);
  return f ? *f : default_field(parse_tag(tag));
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string degrees_summary(const Grading& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.degrees.size(); ++i)
    os << (i ? ", " : "") << g.category.basis(i).name << ": " << g.degrees[i].to_string();
  return os.str();
}

std::string components_summary(const Grading& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, n] : component_dimensions(g)) {
    os << (first ? "" : ", ") << d.to_string() << " -> " << n;
    first = false;
  }
  return os.str();
}

class Runner {
 public:
  explicit Runner(Options o) : opt_(std::move(o)) {}

  int emit(const std::string& text) {
    if (opt_.out.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream f(opt_.out);
    if (!f) {
      std::cerr << "cannot write " << opt_.out << "\n";
      return 1;
    }
    f << text;
    return 0;
  }
  int emit(const Json& j) { return emit(j.dump(2) + "\n"); }
  bool json() const { return opt_.format == "json"; }
  bool csv() const { return opt_.format == "csv"; }

  int catalog_list() {
    if (json()) {
      Json j{{"schema", kSchema}, {"kind", "catalog"}, {"entries", Json::array()}};
      for (const auto& n : catalog_names()) {
        CatalogEntry e = catalog_entry(n);
        j["entries"].push_back({{"name", n}, {"group", e.grading.group.name()}, {"description", e.description}});
      }
      return emit(j);
    }
    std::ostringstream os;
    if (csv()) os << "name,group,description\n";
    for (const auto& n : catalog_names()) {
      CatalogEntry e = catalog_entry(n);
      if (csv())
        os << n << "," << e.grading.group.name() << ",\"" << e.description << "\"\n";
      else
        os << std::left << std::setw(14) << n << std::setw(10) << e.grading.group.name() << e.description << "\n";
    }
    return emit(os.str());
  }

  int catalog_build(const std::string& name) {
    auto f = field_option(opt_);
    CatalogEntry e = f ? catalog_entry(name, *f) : catalog_entry(name);
    if (json()) return emit(grading_to_json(e.grading));
    std::ostringstream os;
    os << e.name << ": " << e.description << "\n"
       << "group: " << e.grading.group.name() << "\n"
       << "field: " << e.grading.category.field().to_string() << "\n"
       << "dimension: " << e.grading.category.dimension() << "\n"
       << "degrees: " << degrees_summary(e.grading) << "\n"
       << "components: " << components_summary(e.grading) << "\n";
    return emit(os.str());
  }

  int catalog_verify(const std::vector<std::string>& names) {
    std::mt19937_64 rng(opt_.seed);
    Json rows = Json::array();
    bool ok = true;
    std::size_t tried = 0, detected = 0;
    for (const auto& n : names) {
      auto f = field_option(opt_);
      CatalogEntry e = f ? catalog_entry(n, *f) : catalog_entry(n);
      auto v = verify_grading(e.grading);
      Tri connected = is_connected(e.grading);
      bool good = !v && connected == Tri::yes;
      ok = ok && good;
      Json row{{"name", n}, {"valid", !v}, {"connected", to_string(connected)}};
      if (v) row["violation"] = violation_to_json(*v);
      // perturb one degree and see whether the check notices
      if (!v && e.grading.category.dimension() > 1) {
        Grading m = e.grading;
        std::size_t i = rng() % m.degrees.size();
        auto pool = m.group.is_finite() ? m.group.elements() : m.group.ball(1);
        GroupElement d = pool[rng() % pool.size()];
        if (d != m.degrees[i]) {
          m.degrees[i] = d;
          ++tried;
          bool caught = verify_grading(m).has_value();
          detected += caught;
          row["mutation"] = {{"basis", m.category.basis(i).name}, {"degree", d.to_string()}, {"detected", caught}};
        }
      }
      rows.push_back(row);
    }
    if (json())
      return emit(Json{{"schema", kSchema},
                       {"kind", "catalog-verify"},
                       {"seed", opt_.seed},
                       {"entries", rows},
                       {"mutations", {{"tried", tried}, {"detected", detected}}},
                       {"ok", ok}}) ||
             (ok ? 0 : 2);
    std::ostringstream os;
    if (csv()) os << "name,valid,connected\n";
    for (const auto& r : rows) {
      if (csv())
        os << r["name"].get<std::string>() << "," << (r["valid"].get<bool>() ? "yes" : "no") << ","
           << r["connected"].get<std::string>() << "\n";
      else
        os << std::left << std::setw(14) << r["name"].get<std::string>()
           << (r["valid"].get<bool>() ? "valid" : "INVALID") << ", connected " << r["connected"].get<std::string>()
           << "\n";
    }
    if (!csv()) os << names.size() << " entries, " << (ok ? "all pass" : "FAILURES") << "; mutations detected "
                   << detected << "/" << tried << "\n";
    int rc = emit(os.str());
    return rc ? rc : (ok ? 0 : 2);
  }

  int verify_file(const std::string& path) {
    Grading g = load_grading(path);
    auto v = verify_grading(g);
    Tri connected = v ? Tri::unknown : is_connected(g);
    if (json()) {
      Json j{{"schema", kSchema}, {"kind", "verification"}, {"name", g.name}, {"valid", !v}};
      if (v)
        j["violation"] = violation_to_json(*v);
      else
        j["connected"] = to_string(connected);
      int rc = emit(j);
      return rc ? rc : (v ? 2 : 0);
    }
    if (v) {
      emit("invalid grading: " + v->message + "\nouter: " + v->outer + "\ninner: " + v->inner +
           "\noffending: " + v->offending + "\n");
      return 2;
    }
    return emit("valid grading by " + g.group.name() + "; connected: " + to_string(connected) + "\n");
  }

  int smash(const std::string& name, const std::string& file) {
    Grading g;
    if (!file.empty()) {
      g = load_grading(file);
    } else {
      auto f = field_option(opt_);
      g = (f ? catalog_entry(name, *f) : catalog_entry(name)).grading;
    }
    if (auto v = verify_grading(g)) throw Error(ErrorCode::check_failure, "not a grading: " + v->message);
    SmashCategory s = g.group.is_finite() ? smash_product(g) : smash_product(g, opt_.radius);
    CoveringReport r = verify_covering(s);
    if (s.full()) {
      try {
        r.galois = verify_galois(s);
      } catch (const Error&) {
        r.galois = false;
      }
    }
    if (json()) return emit(covering_to_json(r));
    std::ostringstream os;
    if (csv()) {
      os << "object,out,in,base_out,base_in\n";
      for (const auto& row : r.stars)
        os << "\"" << row.object << "\"," << row.out_dimension << "," << row.in_dimension << ","
           << row.base_out_dimension << "," << row.base_in_dimension << "\n";
      return emit(os.str());
    }
    os << "smash of " << g.name << " by " << g.group.name() << ": " << s.objects.size() << " objects, "
       << s.realization.dimension() << " morphisms\n"
       << "covering " << r.scope << ": " << r.checked << " stars match";
    if (!r.boundary.empty()) os << ", " << r.boundary.size() << " boundary objects excluded";
    os << "\nconnected: " << (is_connected_category(s) ? "yes" : "no");
    if (s.full()) os << "\nGalois: " << (r.galois ? "yes" : "no");
    os << "\n";
    return emit(os.str());
  }

  int pi1(const std::string& tag) {
    Pi1Result r = fundamental_group(tag, field_for_tag(opt_, tag), opt_.radius);
    Pi1Summary s = summarize(r);
    if (json()) return emit(pi1_to_json(s));
    std::ostringstream os;
    if (csv()) {
      os << "tag,group,certification,radius\n"
         << s.tag << "," << s.group << "," << s.certification << "," << s.radius << "\n";
      return emit(os.str());
    }
    os << s.group << "\n"
       << "certification: " << s.certification;
    if (s.certification == "bounded")
      os << " at radius " << s.radius << " (" << s.compatible_tuples << " compatible tuples)";
    os << "\nlimit: " << s.limit << "\nfield: " << s.field << "\n";
    return emit(os.str());
  }

  int k4_table() {
    Field f = field_option(opt_).value_or(Field::cyclotomic(12));
    auto rows = k4_table_report(f);
    if (json()) return emit(table_to_json(rows));
    // an empty list of other components is printed as 0
    auto others = [](const TableRow& r, const std::string& sep) {
      return r.other_dimensions.empty() ? std::string("0") : join(r.other_dimensions, sep);
    };
    std::ostringstream os;
    if (csv()) {
      os << "group,trivial_dimension,other_dimensions\n";
      for (const auto& r : rows) os << r.group << "," << r.trivial_dimension << "," << others(r, ";") << "\n";
    } else {
      os << std::left << std::setw(10) << "Group" << std::setw(11) << "Trivial" << "Other\n";
      for (const auto& r : rows)
        os << std::left << std::setw(10) << r.group << std::setw(11) << r.trivial_dimension << others(r, ",") << "\n";
    }
    return emit(os.str());
  }

  int no_universal(const std::string& tag) {
    NoUniversalReport r = check_no_universal(tag);
    if (json()) return emit(no_universal_to_json(r));
    std::ostringstream os;
    for (const auto* w : {&r.first, &r.second})
      os << w->group << " (" << w->grading << "): " << w->mechanism << ", " << w->detail << "\n";
    os << "distinguished by " << r.distinction.invariant << ": " << r.distinction.first << " vs "
       << r.distinction.second << "\n"
       << r.conclusion << "\n";
    return emit(os.str());
  }

  int common_quotient(std::size_t n) {
    Field f = field_option(opt_).value_or(n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(n)));
    CommonQuotientCertificate c = verify_common_quotient(n, f);
    if (json())
      return emit(Json{{"schema", kSchema},
                       {"kind", "common-quotient"},
                       {"n", c.n},
                       {"subgroups_checked", c.subgroups_checked},
                       {"good_subgroups", c.good_subgroups},
                       {"minimal_subgroup", c.minimal_subgroup}});
    std::ostringstream os;
    os << "common quotient of M" << n << " gradings: fine modulo " << c.minimal_subgroup << " is the good C" << n
       << " grading\n"
       << c.subgroups_checked << " subgroups checked, " << c.good_subgroups << " with a good quotient\n";
    return emit(os.str());
  }

  int diagram(const std::string& tag) {
    GradingDiagram d = grading_diagram_for(tag, field_for_tag(opt_, tag));
    if (json()) {
      Json nodes = Json::array(), arrows = Json::array();
      for (const auto& n : d.nodes) nodes.push_back({{"name", n.name}, {"group", group_to_json(n.group)}});
      for (const auto& a : d.arrows) {
        Json images = Json::array();
        for (const auto& x : a.map.generator_images()) images.push_back(x.to_string());
        arrows.push_back({{"source", a.source}, {"target", a.target}, {"images", images}});
      }
      return emit(Json{{"schema", kSchema}, {"kind", "diagram"}, {"tag", d.tag}, {"nodes", nodes}, {"arrows", arrows}});
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
      os << i << ": " << d.nodes[i].group.name() << "  " << d.nodes[i].name << "\n";
    for (const auto& a : d.arrows) os << a.source << " -> " << a.target << "\n";
    return emit(os.str());
  }

 private:
  static Grading load_grading(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse_error, path + ": " + e.what());
    }
    return grading_from_json(j);
  }

  Options opt_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradings of small algebras, smash products and fundamental groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--field", opt.field, "Field: Q, Q(z12), F3, or auto for the per-algebra default")
      ->capture_default_str();
  app.add_option("--radius", opt.radius, "Word radius for infinite groups")->capture_default_str();
  app.add_option("--format,--emit", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--out", opt.out, "Write output to this file");

  std::function<int(Runner&)> action;

  auto* catalog = app.add_subcommand("catalog", "Named gradings");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog entries")->callback([&] {
    action = [](Runner& r) { return r.catalog_list(); };
  });
  std::string entry;
  auto* build = catalog->add_subcommand("build", "Construct an entry");
  build->add_option("name", entry, "Catalog entry")->required();
  build->callback([&] { action = [&](Runner& r) { return r.catalog_build(entry); }; });
  auto* check = catalog->add_subcommand("verify", "Verify entries");
  bool all = false;
  std::string one;
  check->add_flag("--all", all, "Every entry");
  check->add_option("name", one, "Catalog entry");
  check->callback([&] {
    if (all == !one.empty()) throw CLI::ValidationError("catalog verify", "give either --all or one entry name");
    action = [&](Runner& r) { return r.catalog_verify(all ? catalog_names() : std::vector<std::string>{one}); };
  });

  auto* verify = app.add_subcommand("verify", "Verify input files");
  verify->require_subcommand(1);
  std::string file;
  auto* grading = verify->add_subcommand("grading", "Check the grading axiom of a JSON grading");
  grading->add_option("--file", file, "Grading JSON")->required();
  grading->callback([&] { action = [&](Runner& r) { return r.verify_file(file); }; });

  auto* smash = app.add_subcommand("smash", "Smash product and covering check");
  std::string smash_file;
  smash->add_option("name", entry, "Catalog entry");
  smash->add_option("--file", smash_file, "Grading JSON");
  smash->callback([&] {
    if (entry.empty() == smash_file.empty()) throw CLI::ValidationError("smash", "give an entry name or --file");
    action = [&](Runner& r) { return r.smash(entry, smash_file); };
  });

  std::string tag;
  auto* pi1 = app.add_subcommand("pi1", "Fundamental group of an algebra tag");
  pi1->add_option("tag", tag, "k2, k3, k4, M2, M3, Mp:<p>, Tn:<n>, trunc:<p>")->required();
  pi1->callback([&] { action = [&](Runner& r) { return r.pi1(tag); }; });

  auto* report = app.add_subcommand("report", "Tables and certificates");
  report->require_subcommand(1);
  report->add_subcommand("k4-table", "Specific gradings of k^4")->callback([&] {
    action = [](Runner& r) { return r.k4_table(); };
  });
  auto* nu = report->add_subcommand("no-universal", "Two non-isomorphic simply connected gradings");
  nu->add_option("tag", tag, "M2, M3, Mp:<p>, trunc:<p> or k4")->required();
  nu->callback([&] { action = [&](Runner& r) { return r.no_universal(tag); }; });
  std::size_t n = 2;
  auto* cq = report->add_subcommand("common-quotient", "Common quotient of the fine and good gradings of M_n");
  cq->add_option("n", n, "Matrix size")->required()->check(CLI::Range(2, 6));
  cq->callback([&] { action = [&](Runner& r) { return r.common_quotient(n); }; });
  auto* dg = report->add_subcommand("diagram", "Grading diagram of an algebra tag");
  dg->add_option("tag", tag, "Algebra tag")->required();
  dg->callback([&] { action = [&](Runner& r) { return r.diagram(tag); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Runner runner(opt);
  try {
    return action(runner);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (opt.format == "json" && !is_usage_error(e.code()))
      std::cout << Json{{"schema", kSchema}, {"kind", "error"}, {"code", to_string(e.code())}, {"message", e.what()}}
                       .dump(2)
                << "\n";
    return is_usage_error(e.code()) ? 1 : 2;
  }
}
