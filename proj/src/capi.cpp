#include "lgm/lgm.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lgm/errors.hpp"
#include "lgm/serialize.hpp"

struct lgm_poly {
  lgm::LaurentPolynomial poly;
  std::vector<std::string> variables;
};

struct lgm_corpus {
  std::vector<lgm::FanoEntry> entries;
};

namespace {

using lgm::Json;

thread_local std::string last_error;

lgm_status fail(lgm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
lgm_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const lgm::ParseError& e) {
    return fail(LGM_ERR_PARSE, e.what());
  } catch (const lgm::NotLaurentError& e) {
    return fail(LGM_ERR_NOT_LAURENT, e.what());
  } catch (const lgm::InvalidArgument& e) {
    return fail(LGM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lgm::IoError& e) {
    return fail(LGM_ERR_IO, e.what());
  } catch (const lgm::SchemaError& e) {
    return fail(LGM_ERR_SCHEMA, e.what());
  } catch (const lgm::BudgetExceeded& e) {
    return fail(LGM_ERR_BUDGET, e.what());
  } catch (const Json::exception& e) {
    return fail(LGM_ERR_SCHEMA, e.what());
  } catch (const std::exception& e) {
    return fail(LGM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LGM_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lgm_status emit(const Json& j, char** out, lgm_status status = LGM_OK) {
  *out = copy_string(j.dump());
  return status;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw lgm::InvalidArgument(std::string(what) + " must not be null");
}

Json polytope_report(const lgm::LaurentPolynomial& f) {
  const lgm::Polytope newton = lgm::newton_polytope(f);
  Json out{{"newton", lgm::to_json(newton)}, {"origin_interior", lgm::contains_origin_interior(newton)}};
  if (out["origin_interior"].get<bool>()) {
    const lgm::Polytope dual = lgm::dual_polytope(newton);
    out["dual"] = lgm::to_json(dual);
    out["dual_volume"] = dual.dim() <= 3 ? Json(lgm::normalized_volume(dual).get_str()) : Json(nullptr);
  }
  return out;
}

Json annihilator_report(const lgm::IntegerSeries& s, std::size_t equations, int order, int degree) {
  Json out{{"series_order", s.order()}, {"equations", equations + 1}};
  std::vector<lgm::DifferentialOperator> basis;
  if (order < 0 || degree < 0) {
    const auto sweep = lgm::sweep_annihilators(s, equations);
    out["sweep"] = true;
    if (sweep) {
      out["order"] = sweep->order;
      out["degree"] = sweep->degree;
      basis = sweep->basis;
    } else {
      out["order"] = nullptr;
      out["degree"] = nullptr;
    }
  } else {
    out["sweep"] = false;
    out["order"] = order;
    out["degree"] = degree;
    basis = lgm::find_annihilator(s, static_cast<std::size_t>(order), static_cast<std::size_t>(degree), equations);
  }
  Json ops = Json::array();
  bool all_hold = true;
  for (const auto& op : basis) {
    Json j = lgm::to_json(op);
    if (equations < s.order()) {
      const auto image = lgm::apply_operator(op, s);
      bool holds = true;
      for (std::size_t i = equations + 1; i < image.size(); ++i) holds = holds && image[i] == 0;
      j["holdout_ok"] = holds;
      all_hold = all_hold && holds;
    }
    ops.push_back(std::move(j));
  }
  out["nullspace_dim"] = basis.size();
  out["operators"] = ops;
  out["holdout"] = Json{{"from", equations + 1}, {"to", s.order()}, {"ok", all_hold}};
  return out;
}

}  // namespace

extern "C" {

const char* lgm_version(void) { return "1.0.0"; }

const char* lgm_status_name(lgm_status status) {
  switch (status) {
    case LGM_OK: return "ok";
    case LGM_MISMATCH: return "mismatch";
    case LGM_ERR_PARSE: return "parse error";
    case LGM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LGM_ERR_NOT_LAURENT: return "not a Laurent polynomial";
    case LGM_ERR_IO: return "i/o error";
    case LGM_ERR_SCHEMA: return "schema error";
    case LGM_ERR_BUDGET: return "budget exceeded";
    case LGM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lgm_last_error(void) { return last_error.c_str(); }

void lgm_string_free(char* s) { std::free(s); }

lgm_status lgm_poly_parse(const char* text, const char* const* variables, size_t nvars, lgm_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    const lgm::Expr e = lgm::parse(text);
    std::vector<std::string> names;
    if (variables == nullptr) {
      const auto vs = lgm::variables(e);
      names.assign(vs.begin(), vs.end());
    } else {
      for (size_t i = 0; i < nvars; ++i) {
        require(variables[i], "variable name");
        names.emplace_back(variables[i]);
      }
    }
    auto* p = new lgm_poly{lgm::to_laurent(e, names), names};
    *out = p;
    return LGM_OK;
  });
}

void lgm_poly_free(lgm_poly* poly) { delete poly; }

size_t lgm_poly_nvars(const lgm_poly* poly) { return poly == nullptr ? 0 : poly->poly.nvars(); }

size_t lgm_poly_term_count(const lgm_poly* poly) { return poly == nullptr ? 0 : poly->poly.size(); }

lgm_status lgm_poly_render(const lgm_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = copy_string(lgm::render(poly->poly, poly->variables));
    return LGM_OK;
  });
}

lgm_status lgm_poly_series(const lgm_poly* poly, size_t terms, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    return emit(Json{{"series", lgm::to_json(lgm::constant_term_series(poly->poly, terms))}}, out);
  });
}

lgm_status lgm_poly_polytope(const lgm_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    return emit(polytope_report(poly->poly), out);
  });
}

lgm_status lgm_poly_semiweak(const lgm_poly* poly, const char* degree, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(degree, "degree");
    require(out, "out");
    lgm::Integer d;
    if (d.set_str(degree, 10) != 0) throw lgm::InvalidArgument(std::string("malformed degree \"") + degree + "\"");
    return emit(lgm::to_json(lgm::semiweak_check(poly->poly, d)), out);
  });
}

lgm_status lgm_poly_ehrhart(const lgm_poly* poly, size_t kmax, int dual, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    lgm::Polytope p = lgm::newton_polytope(poly->poly);
    if (dual != 0) p = lgm::dual_polytope(p);
    Json j = lgm::to_json(lgm::ehrhart_counts(p, kmax));
    j["polytope"] = dual != 0 ? "dual" : "newton";
    return emit(j, out);
  });
}

lgm_status lgm_poly_annihilator(const lgm_poly* poly, size_t terms, size_t holdout, int order, int degree,
                                char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    if (holdout > terms) throw lgm::InvalidArgument("holdout exceeds terms");
    const auto s = lgm::constant_term_series(poly->poly, terms);
    return emit(annihilator_report(s, terms - holdout, order, degree), out);
  });
}

lgm_status lgm_series_annihilator(const char* series_json, size_t terms, int order, int degree, char** out) {
  return guarded([&] {
    require(series_json, "series_json");
    require(out, "out");
    const auto s = lgm::series_from_json(Json::parse(series_json));
    if (s.size() == 0) throw lgm::InvalidArgument("empty series");
    return emit(annihilator_report(s, terms, order, degree), out);
  });
}

lgm_status lgm_corpus_builtin(lgm_corpus** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lgm_corpus{lgm::builtin_corpus()};
    return LGM_OK;
  });
}

lgm_status lgm_corpus_load(const char* path, lgm_corpus** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new lgm_corpus{lgm::load_corpus(path)};
    return LGM_OK;
  });
}

void lgm_corpus_free(lgm_corpus* corpus) { delete corpus; }

size_t lgm_corpus_size(const lgm_corpus* corpus) { return corpus == nullptr ? 0 : corpus->entries.size(); }

lgm_status lgm_corpus_list(const lgm_corpus* corpus, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    Json entries = Json::array();
    for (const auto& e : corpus->entries) entries.push_back(lgm::to_json(e));
    return emit(Json{{"entries", entries}}, out);
  });
}

lgm_status lgm_corpus_entry(const lgm_corpus* corpus, int id, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    return emit(lgm::to_json(lgm::find_entry(corpus->entries, id)), out);
  });
}

lgm_status lgm_corpus_entry_poly(const lgm_corpus* corpus, int id, lgm_poly** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    const auto& e = lgm::find_entry(corpus->entries, id);
    *out = new lgm_poly{lgm::entry_polynomial(e), lgm::corpus_variables()};
    return LGM_OK;
  });
}

lgm_status lgm_corpus_verify(const lgm_corpus* corpus, int id, size_t terms, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    const auto report = lgm::verify_entry(lgm::find_entry(corpus->entries, id), terms);
    return emit(lgm::to_json(report), out, report.passed() ? LGM_OK : LGM_MISMATCH);
  });
}

lgm_status lgm_corpus_verify_all(const lgm_corpus* corpus, size_t terms, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    const auto reports = lgm::verify_all(corpus->entries, terms);
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
      list.push_back(lgm::to_json(r));
      if (!r.passed()) ++failed;
    }
    Json j{{"terms", terms}, {"passed", reports.size() - failed}, {"failed", failed}, {"reports", list}};
    return emit(j, out, failed == 0 ? LGM_OK : LGM_MISMATCH);
  });
}

lgm_status lgm_construct_toric(const int64_t* rays, size_t nrays, size_t dim, char** out) {
  return guarded([&] {
    require(out, "out");
    if (nrays > 0) require(rays, "rays");
    std::vector<lgm::Exponent> rs;
    for (size_t i = 0; i < nrays; ++i) rs.emplace_back(rays + i * dim, rays + (i + 1) * dim);
    lgm::NamedPolynomial p{lgm::toric_polynomial(rs), lgm::default_variable_names(dim)};
    return emit(lgm::to_json(p), out);
  });
}

lgm_status lgm_construct_ci(int ambient_dim, const int* degrees, size_t ndegrees, char** out) {
  return guarded([&] {
    require(out, "out");
    if (ndegrees > 0) require(degrees, "degrees");
    const std::vector<int> ds(degrees, degrees + ndegrees);
    return emit(lgm::to_json(lgm::hori_vafa_ci(ambient_dim, ds)), out);
  });
}

lgm_status lgm_construct_grassmannian(int k, int n, char** out) {
  return guarded([&] {
    require(out, "out");
    return emit(lgm::to_json(lgm::grassmannian_polynomial(k, n)), out);
  });
}

lgm_status lgm_construct_grass_ci(int k, int n, int sections, char** out) {
  return guarded([&] {
    require(out, "out");
    return emit(lgm::to_json(lgm::grassmannian_hyperplane_system(k, n, sections)), out);
  });
}

lgm_status lgm_construct_weighted(const int* weights, size_t nweights, int degree, const int* partition,
                                  size_t npartition, char** out) {
  return guarded([&] {
    require(out, "out");
    if (nweights > 0) require(weights, "weights");
    if (npartition > 0) require(partition, "partition");
    const std::vector<int> w(weights, weights + nweights);
    const std::vector<int> p(partition, partition + npartition);
    return emit(lgm::to_json(lgm::weighted_hypersurface_system(w, degree, p)), out);
  });
}

lgm_status lgm_eliminate(const char* model_json, const char* plan_json, const char* bindings_json, char** out) {
  return guarded([&] {
    require(model_json, "model_json");
    require(plan_json, "plan_json");
    require(out, "out");
    const lgm::ConstrainedModel model = lgm::model_from_json(Json::parse(model_json));
    const Json plan_doc = Json::parse(plan_json);
    if (!plan_doc.is_array()) throw lgm::SchemaError("plan: expected [[constraint, \"variable\"], ...]");
    std::vector<lgm::PlanStep> plan;
    for (const auto& step : plan_doc) {
      if (!step.is_array() || step.size() != 2 || !step[0].is_number_unsigned() || !step[1].is_string()) {
        throw lgm::SchemaError("plan: each step is [constraint, \"variable\"]");
      }
      plan.push_back({step[0].get<std::size_t>(), step[1].get<std::string>()});
    }
    lgm::Elimination result = lgm::eliminate(model, plan);
    Json j = lgm::to_json(result);
    if (bindings_json != nullptr) {
      const Json b = Json::parse(bindings_json);
      if (!b.is_object()) throw lgm::SchemaError("bindings: expected {\"name\": \"expr\", ...}");
      lgm::Bindings bindings;
      for (const auto& [name, value] : b.items()) {
        if (!value.is_string()) throw lgm::SchemaError("bindings: values must be expression strings");
        bindings.emplace(name, lgm::parse(value.get<std::string>()));
      }
      j["substituted"] = lgm::render(lgm::substitute(result.potential, bindings));
    }
    return emit(j, out);
  });
}

lgm_status lgm_identity(const char* lhs, const char* rhs, unsigned trials, uint64_t seed, char** out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    const auto r = lgm::random_equal(lgm::parse(lhs), lgm::parse(rhs), trials, seed);
    Json j = lgm::to_json(r);
    j["seed"] = seed;
    return emit(j, out, r.equal ? LGM_OK : LGM_MISMATCH);
  });
}

}  // extern "C"
