// lg: command-line front end over the lgm C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgm/lgm.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

struct PolyDeleter {
  void operator()(lgm_poly* p) const { lgm_poly_free(p); }
};
struct CorpusDeleter {
  void operator()(lgm_corpus* c) const { lgm_corpus_free(c); }
};
using PolyHandle = std::unique_ptr<lgm_poly, PolyDeleter>;
using CorpusHandle = std::unique_ptr<lgm_corpus, CorpusDeleter>;

// Converts a C API result into JSON, throwing Failure on errors.
Json take(lgm_status status, char*& out) {
  if (status != LGM_OK && status != LGM_MISMATCH) {
    lgm_string_free(out);
    out = nullptr;
    throw Failure{kExitUsage, std::string(lgm_status_name(status)) + ": " + lgm_last_error()};
  }
  Json j = Json::parse(out);
  lgm_string_free(out);
  out = nullptr;
  return j;
}

void check(lgm_status status) {
  if (status != LGM_OK) throw Failure{kExitUsage, std::string(lgm_status_name(status)) + ": " + lgm_last_error()};
}

struct Options {
  std::string format = "text";
  std::string corpus_path;
  std::optional<int> entry;
  std::string poly;
  std::size_t terms = 20;
};

CorpusHandle open_corpus(const Options& o) {
  lgm_corpus* c = nullptr;
  check(o.corpus_path.empty() ? lgm_corpus_builtin(&c) : lgm_corpus_load(o.corpus_path.c_str(), &c));
  return CorpusHandle(c);
}

PolyHandle open_poly(const Options& o) {
  if (o.entry.has_value() == !o.poly.empty()) throw Failure{kExitUsage, "give exactly one of --entry and --poly"};
  lgm_poly* p = nullptr;
  if (o.entry) {
    const CorpusHandle c = open_corpus(o);
    check(lgm_corpus_entry_poly(c.get(), *o.entry, &p));
  } else {
    check(lgm_poly_parse(o.poly.c_str(), nullptr, 0, &p));
  }
  return PolyHandle(p);
}

std::string series_text(const Json& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += s[i].get<std::string>();
  }
  return out + ")";
}

std::string match_text(const Json& m) {
  if (m.is_null()) return "n/a";
  if (m["match"].get<bool>()) {
    return "match through t^" + std::to_string(m["compared_upto"].get<std::size_t>()) +
           (m["up_to_shift"].get<bool>() ? " (up to constant shift)" : "");
  }
  return "MISMATCH at t^" + std::to_string(m["index"].get<std::size_t>()) + " (" + m["lhs"].get<std::string>() +
         " vs " + m["rhs"].get<std::string>() + ")";
}

std::string vertices_text(const Json& p) {
  std::string out;
  for (const auto& v : p["vertices"]) {
    out += "  (";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get<std::string>();
    out += ")\n";
  }
  return out;
}

std::string verify_text(const Json& r) {
  std::ostringstream os;
  os << "entry " << r["id"].get<int>() << ": " << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  os << "  series     " << series_text(r["series"]) << "\n";
  os << "  reference  " << match_text(r["reference"]) << "\n";
  os << "  closed     " << match_text(r["closed_form"]) << "\n";
  for (const auto& a : r["alternates"]) os << "  alternate  " << a["polynomial"].get<std::string>() << ": " << match_text(a["match"]) << "\n";
  const auto& sw = r["semiweak"];
  os << "  interior   " << (r["origin_interior"].get<bool>() ? "yes" : "no") << "\n";
  os << "  semiweak   " << (sw["semiweak"].get<bool>() ? "yes" : "no") << " (dual volume "
     << (sw["dual_volume"].is_null() ? std::string("n/a") : sw["dual_volume"].get<std::string>()) << ", degree "
     << sw["degree"].get<std::string>() << ")\n";
  return os.str();
}

std::string polynomial_text(const Json& j) {
  std::ostringstream os;
  os << "variables: ";
  for (std::size_t i = 0; i < j["variables"].size(); ++i) os << (i ? " " : "") << j["variables"][i].get<std::string>();
  os << "\n" << j["polynomial"].get<std::string>() << "\n";
  return os.str();
}

std::string model_text(const Json& j) {
  std::ostringstream os;
  os << "variables: ";
  for (std::size_t i = 0; i < j["variables"].size(); ++i) os << (i ? " " : "") << j["variables"][i].get<std::string>();
  os << "\n";
  std::size_t k = 0;
  for (const auto& c : j["constraints"]) os << "constraint " << k++ << ": " << c.get<std::string>() << " = 1\n";
  os << "potential: " << j["potential"].get<std::string>() << "\n";
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<int> int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, std::string(flag) + ": malformed integer list \"" + s + "\""};
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Failure{kExitUsage, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent polynomial mirror toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--corpus", o.corpus_path, "Corpus JSON file replacing the builtin corpus");

  auto add_target = [&o](CLI::App* sub) {
    auto* e = sub->add_option("--entry", o.entry, "Corpus entry id")->check(CLI::Range(1, 17));
    auto* p = sub->add_option("--poly", o.poly, "Laurent polynomial expression");
    e->excludes(p);
  };
  auto add_terms = [&o](CLI::App* sub) {
    sub->add_option("--terms", o.terms, "Series truncation order")->check(CLI::Range(0, 100000))->capture_default_str();
  };

  auto* list = app.add_subcommand("list", "List corpus entries");

  auto* series = app.add_subcommand("series", "Constant-term series");
  add_target(series);
  add_terms(series);

  auto* verify = app.add_subcommand("verify", "Verify one corpus entry");
  verify->add_option("--entry", o.entry, "Corpus entry id")->required()->check(CLI::Range(1, 17));
  add_terms(verify);

  auto* verify_all = app.add_subcommand("verify-all", "Verify every corpus entry");
  add_terms(verify_all);

  auto* polytope = app.add_subcommand("polytope", "Newton polytope and its dual");
  add_target(polytope);

  std::string degree_text;
  auto* semiweak = app.add_subcommand("semiweak", "Compare the dual volume with the degree");
  add_target(semiweak);
  semiweak->add_option("--degree", degree_text, "Anticanonical degree (defaults to the corpus value)");

  std::size_t kmax = 6;
  bool newton = false;
  auto* ehrhart = app.add_subcommand("ehrhart", "Lattice point counts of dilations");
  add_target(ehrhart);
  ehrhart->add_option("--kmax", kmax, "Largest dilation")->check(CLI::Range(0, 1000))->capture_default_str();
  ehrhart->add_flag("--newton", newton, "Count the Newton polytope instead of its dual");

  std::optional<int> op_order, op_degree;
  std::size_t holdout = 0;
  auto* pfop = app.add_subcommand("pfop", "Annihilating differential operators of the series");
  add_target(pfop);
  add_terms(pfop);
  pfop->add_option("--order", op_order, "Bound on the order in D")->check(CLI::Range(0, 64));
  pfop->add_option("--degree", op_degree, "Bound on the degree in t")->check(CLI::Range(0, 64));
  pfop->add_option("--holdout", holdout, "Trailing coefficients kept out of the linear system")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build polynomials and constraint systems");
  construct->require_subcommand(1);
  std::string rays_text, degrees_text, weights_text, partition_text;
  int ambient = 0, gk = 0, gn = 0, sections = 0, wdegree = 0;
  auto* c_toric = construct->add_subcommand("toric", "Sum of monomials over fan rays");
  c_toric->add_option("--rays", rays_text, "Rays as \"1,0,0;0,1,0;...\"")->required();
  auto* c_ci = construct->add_subcommand("ci", "Hori-Vafa polynomial of a complete intersection");
  c_ci->add_option("--N", ambient, "Ambient projective dimension")->required();
  c_ci->add_option("--degrees", degrees_text, "Comma-separated degrees");
  auto* c_grass = construct->add_subcommand("grassmannian", "Grassmannian mirror polynomial");
  c_grass->add_option("--k", gk, "k")->required();
  c_grass->add_option("--n", gn, "N")->required();
  auto* c_grass_ci = construct->add_subcommand("grass-ci", "Grassmannian hyperplane-section system");
  c_grass_ci->add_option("--k", gk, "k")->required();
  c_grass_ci->add_option("--n", gn, "N")->required();
  c_grass_ci->add_option("--sections", sections, "Number of hyperplane sections")->required();
  auto* c_weighted = construct->add_subcommand("weighted", "Weighted hypersurface system");
  c_weighted->add_option("--weights", weights_text, "Comma-separated weights")->required();
  c_weighted->add_option("--d", wdegree, "Hypersurface degree")->required();
  c_weighted->add_option("--partition", partition_text, "Comma-separated partition of d")->required();

  std::string model_path, plan_text;
  std::vector<std::string> sets;
  auto* eliminate = app.add_subcommand("eliminate", "Solve constraints of a model and substitute");
  eliminate->add_option("--model", model_path, "Model JSON file, or - for stdin")->required();
  eliminate->add_option("--plan", plan_text, "Steps as \"constraint:variable,...\"")->required();
  eliminate->add_option("--set", sets, "Substitution NAME=EXPR applied to the result (repeatable)");

  std::string lhs, rhs;
  unsigned trials = 20;
  std::uint64_t seed = 0;
  auto* identity = app.add_subcommand("identity", "Randomized identity test of two expressions");
  identity->add_option("--lhs", lhs, "Left-hand expression")->required();
  identity->add_option("--rhs", rhs, "Right-hand expression")->required();
  identity->add_option("--trials", trials, "Number of agreeing evaluations")->check(CLI::Range(1u, 100000u))->capture_default_str();
  identity->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool as_json = o.format == "json";
  int code = kExitOk;
  Json result;
  std::string text;

  try {
    char* out = nullptr;
    if (list->parsed()) {
      const CorpusHandle c = open_corpus(o);
      result = take(lgm_corpus_list(c.get(), &out), out);
      std::ostringstream os;
      for (const auto& e : result["entries"]) {
        os << e["id"].get<int>() << "\tindex " << e["fano_index"].get<int>() << "\tdegree " << e["degree"].dump()
           << "\t" << e["polynomial"].get<std::string>() << "\n";
      }
      text = os.str();
    } else if (series->parsed()) {
      const PolyHandle p = open_poly(o);
      result = take(lgm_poly_series(p.get(), o.terms, &out), out);
      text = series_text(result["series"]) + "\n";
    } else if (verify->parsed()) {
      const CorpusHandle c = open_corpus(o);
      const lgm_status st = lgm_corpus_verify(c.get(), *o.entry, o.terms, &out);
      result = take(st, out);
      if (st == LGM_MISMATCH) code = kExitMismatch;
      text = verify_text(result);
    } else if (verify_all->parsed()) {
      const CorpusHandle c = open_corpus(o);
      const lgm_status st = lgm_corpus_verify_all(c.get(), o.terms, &out);
      result = take(st, out);
      if (st == LGM_MISMATCH) code = kExitMismatch;
      for (const auto& r : result["reports"]) text += verify_text(r);
      text += std::to_string(result["passed"].get<std::size_t>()) + " passed, " +
              std::to_string(result["failed"].get<std::size_t>()) + " failed\n";
    } else if (polytope->parsed()) {
      const PolyHandle p = open_poly(o);
      result = take(lgm_poly_polytope(p.get(), &out), out);
      std::ostringstream os;
      os << "Newton polytope: " << result["newton"]["vertices"].size() << " vertices, "
         << result["newton"]["facets"].size() << " facets\n"
         << vertices_text(result["newton"]);
      os << "origin in interior: " << (result["origin_interior"].get<bool>() ? "yes" : "no") << "\n";
      if (result.contains("dual")) {
        os << "dual polytope: " << result["dual"]["vertices"].size() << " vertices"
           << (result["dual"]["lattice"].get<bool>() ? " (lattice)" : " (rational)") << "\n"
           << vertices_text(result["dual"]);
        if (!result["dual_volume"].is_null()) os << "normalized dual volume: " << result["dual_volume"].get<std::string>() << "\n";
      }
      text = os.str();
    } else if (semiweak->parsed()) {
      const PolyHandle p = open_poly(o);
      if (degree_text.empty()) {
        if (!o.entry) throw Failure{kExitUsage, "--degree is required with --poly"};
        const CorpusHandle c = open_corpus(o);
        const Json entry = take(lgm_corpus_entry(c.get(), *o.entry, &out), out);
        degree_text = entry["degree"].is_string() ? entry["degree"].get<std::string>() : entry["degree"].dump();
      }
      result = take(lgm_poly_semiweak(p.get(), degree_text.c_str(), &out), out);
      if (!result["semiweak"].get<bool>()) code = kExitMismatch;
      text = std::string(result["semiweak"].get<bool>() ? "semiweak" : "not semiweak") + ": dual volume " +
             (result["dual_volume"].is_null() ? std::string("n/a") : result["dual_volume"].get<std::string>()) +
             ", degree " + result["degree"].get<std::string>() + "\n";
    } else if (ehrhart->parsed()) {
      const PolyHandle p = open_poly(o);
      result = take(lgm_poly_ehrhart(p.get(), kmax, newton ? 0 : 1, &out), out);
      std::ostringstream os;
      os << result["polytope"].get<std::string>() << " polytope\n";
      for (std::size_t k = 0; k < result["counts"].size(); ++k) os << "L(" << k << ") = " << result["counts"][k].get<std::string>() << "\n";
      os << "interpolant:";
      for (std::size_t k = 0; k < result["coefficients"].size(); ++k) {
        const std::string c = result["coefficients"][k].get<std::string>();
        if (c == "0") continue;
        os << (c[0] == '-' ? " - " : (k ? " + " : " ")) << (c[0] == '-' ? c.substr(1) : c);
        if (k > 0) os << "*k" << (k > 1 ? "^" + std::to_string(k) : "");
      }
      os << (result["consistent"].get<bool>() ? "" : "  (not a polynomial on k <= kmax)") << "\n";
      text = os.str();
    } else if (pfop->parsed()) {
      if (op_order.has_value() != op_degree.has_value()) throw Failure{kExitUsage, "give both --order and --degree, or neither"};
      const PolyHandle p = open_poly(o);
      result = take(lgm_poly_annihilator(p.get(), o.terms, holdout, op_order.value_or(-1), op_degree.value_or(-1), &out), out);
      std::ostringstream os;
      if (result["order"].is_null()) {
        os << "no annihilator within order <= 4, degree <= 6\n";
      } else {
        os << "order " << result["order"].get<int>() << ", degree " << result["degree"].get<int>() << ": nullspace dimension "
           << result["nullspace_dim"].get<std::size_t>() << "\n";
      }
      for (const auto& op : result["operators"]) os << "  " << op["text"].get<std::string>() << "\n";
      if (holdout > 0) {
        os << "held-out t^" << result["holdout"]["from"].get<std::size_t>() << "..t^" << result["holdout"]["to"].get<std::size_t>()
           << ": " << (result["holdout"]["ok"].get<bool>() ? "annihilated" : "NOT annihilated") << "\n";
        if (!result["holdout"]["ok"].get<bool>()) code = kExitMismatch;
      }
      text = os.str();
    } else if (construct->parsed()) {
      if (c_toric->parsed()) {
        std::vector<std::int64_t> flat;
        std::size_t dim = 0, count = 0;
        for (const auto& ray : split(rays_text, ';')) {
          const auto r = int_list(ray, "--rays");
          if (count > 0 && r.size() != dim) throw Failure{kExitUsage, "--rays: rays of differing length"};
          dim = r.size();
          flat.insert(flat.end(), r.begin(), r.end());
          ++count;
        }
        result = take(lgm_construct_toric(flat.data(), count, dim, &out), out);
        text = polynomial_text(result);
      } else if (c_ci->parsed()) {
        const auto ds = int_list(degrees_text, "--degrees");
        result = take(lgm_construct_ci(ambient, ds.data(), ds.size(), &out), out);
        text = polynomial_text(result);
      } else if (c_grass->parsed()) {
        result = take(lgm_construct_grassmannian(gk, gn, &out), out);
        text = polynomial_text(result);
      } else if (c_grass_ci->parsed()) {
        result = take(lgm_construct_grass_ci(gk, gn, sections, &out), out);
        text = model_text(result);
      } else if (c_weighted->parsed()) {
        const auto w = int_list(weights_text, "--weights");
        const auto part = int_list(partition_text, "--partition");
        result = take(lgm_construct_weighted(w.data(), w.size(), wdegree, part.data(), part.size(), &out), out);
        text = model_text(result);
      }
    } else if (eliminate->parsed()) {
      Json plan = Json::array();
      for (const auto& step : split(plan_text, ',')) {
        const auto colon = step.find(':');
        if (colon == std::string::npos) throw Failure{kExitUsage, "--plan: step \"" + step + "\" is not constraint:variable"};
        const auto idx = int_list(step.substr(0, colon), "--plan");
        if (idx.size() != 1 || idx[0] < 0) throw Failure{kExitUsage, "--plan: bad constraint index in \"" + step + "\""};
        plan.push_back(Json::array({idx[0], step.substr(colon + 1)}));
      }
      Json bindings = Json::object();
      for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw Failure{kExitUsage, "--set: expected NAME=EXPR, got \"" + s + "\""};
        bindings[s.substr(0, eq)] = s.substr(eq + 1);
      }
      const std::string model = read_file(model_path);
      const std::string plan_s = plan.dump();
      const std::string bind_s = bindings.dump();
      result = take(lgm_eliminate(model.c_str(), plan_s.c_str(), sets.empty() ? nullptr : bind_s.c_str(), &out), out);
      std::ostringstream os;
      for (const auto& [name, value] : result["solutions"].items()) os << name << " = " << value.get<std::string>() << "\n";
      os << "potential: " << result["potential"].get<std::string>() << "\n";
      if (result.contains("substituted")) os << "substituted: " << result["substituted"].get<std::string>() << "\n";
      text = os.str();
    } else if (identity->parsed()) {
      const lgm_status st = lgm_identity(lhs.c_str(), rhs.c_str(), trials, seed, &out);
      result = take(st, out);
      if (st == LGM_MISMATCH) code = kExitMismatch;
      std::ostringstream os;
      if (result["equal"].get<bool>()) {
        os << "equal (" << result["trials"].get<unsigned>() << " agreeing evaluations, seed " << seed << ")\n";
      } else {
        os << "NOT equal: lhs " << result["lhs_value"].get<std::uint64_t>() << " vs rhs " << result["rhs_value"].get<std::uint64_t>()
           << " at";
        for (const auto& [name, v] : result["witness"].items()) os << " " << name << "=" << v.get<std::uint64_t>();
        os << "\n";
      }
      text = os.str();
    }
  } catch (const Failure& f) {
    std::cerr << "lg: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "lg: " << e.what() << "\n";
    return kExitUsage;
  }

  if (as_json) {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}
