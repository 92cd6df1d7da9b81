#include "lgm/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lgm/errors.hpp"
#include "lgm/expr.hpp"

namespace lgm {

namespace detail {
extern const std::string_view kBuiltinCorpus;
}

namespace {

using nlohmann::json;

class EntryReader {
 public:
  EntryReader(const json& j, std::string label) : j_(j), label_(std::move(label)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw SchemaError(label_ + ": field '" + field + "' " + what);
  }

  const json* optional(const std::string& field) const {
    const auto it = j_.find(field);
    return it == j_.end() || it->is_null() ? nullptr : &*it;
  }

  const json& required(const std::string& field) const {
    const json* v = optional(field);
    if (v == nullptr) fail(field, "is missing");
    return *v;
  }

  long integer(const std::string& field, const json& v) const {
    if (!v.is_number_integer()) fail(field, "must be an integer");
    return v.get<long>();
  }

  std::string string(const std::string& field, const json& v) const {
    if (!v.is_string()) fail(field, "must be a string");
    return v.get<std::string>();
  }

  std::vector<int> int_list(const std::string& field, const json& v) const {
    if (!v.is_array()) fail(field, "must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) out.push_back(static_cast<int>(integer(field, x)));
    return out;
  }

  Integer big_integer(const std::string& field, const json& v) const {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (!v.is_string()) fail(field, "must hold integers or decimal strings");
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) fail(field, "holds a malformed integer \"" + s + "\"");
    return out;
  }

  void check_polynomial(const std::string& field, const std::string& text) const {
    try {
      to_laurent(parse(text), corpus_variables());
    } catch (const Error& e) {
      fail(field, std::string("is not a Laurent polynomial in x, y, z: ") + e.what());
    }
  }

 private:
  const json& j_;
  std::string label_;
};

FanoEntry read_entry(const json& j, std::size_t position) {
  if (!j.is_object()) throw SchemaError("entry at position " + std::to_string(position) + ": not an object");
  const auto id_it = j.find("id");
  if (id_it == j.end() || !id_it->is_number_integer()) {
    throw SchemaError("entry at position " + std::to_string(position) + ": field 'id' is missing or not an integer");
  }
  FanoEntry e;
  e.id = id_it->get<int>();
  const EntryReader r(j, "entry " + std::to_string(e.id));

  e.fano_index = static_cast<int>(r.integer("fano_index", r.required("fano_index")));
  if (e.fano_index < 1 || e.fano_index > 4) r.fail("fano_index", "must be between 1 and 4");
  e.degree = r.big_integer("degree", r.required("degree"));
  if (e.degree <= 0) r.fail("degree", "must be positive");
  e.description = r.string("description", r.required("description"));
  e.polynomial = r.string("polynomial", r.required("polynomial"));
  r.check_polynomial("polynomial", e.polynomial);

  if (const json* alts = r.optional("alternates")) {
    if (!alts->is_array()) r.fail("alternates", "must be an array of strings");
    for (const auto& a : *alts) {
      e.alternates.push_back(r.string("alternates", a));
      r.check_polynomial("alternates", e.alternates.back());
    }
  }

  if (const json* ref = r.optional("reference_series")) {
    if (!ref->is_object()) r.fail("reference_series", "must be an object");
    const auto coeffs = ref->find("coeffs");
    if (coeffs == ref->end() || !coeffs->is_array() || coeffs->empty()) {
      r.fail("reference_series.coeffs", "must be a nonempty array");
    }
    std::vector<Integer> values;
    for (const auto& c : *coeffs) values.push_back(r.big_integer("reference_series.coeffs", c));
    if (values.front() != 1) r.fail("reference_series.coeffs", "must start with 1");
    const auto prov = ref->find("provenance");
    if (prov == ref->end() || !prov->is_string() || (*prov != "published" && *prov != "derived")) {
      r.fail("reference_series.provenance", "must be \"published\" or \"derived\"");
    }
    e.reference_series = ReferenceSeries{IntegerSeries(std::move(values)), prov->get<std::string>()};
  }

  if (const json* ci = r.optional("ci")) {
    if (!ci->is_object()) r.fail("ci", "must be an object");
    const EntryReader cr(*ci, "entry " + std::to_string(e.id) + " ci");
    e.ci = CompleteIntersection{static_cast<int>(cr.integer("N", cr.required("N"))),
                                cr.int_list("degrees", cr.required("degrees"))};
  }

  if (const json* w = r.optional("weighted")) {
    if (!w->is_object()) r.fail("weighted", "must be an object");
    const EntryReader wr(*w, "entry " + std::to_string(e.id) + " weighted");
    e.weighted = WeightedHypersurface{wr.int_list("weights", wr.required("weights")),
                                      static_cast<int>(wr.integer("d", wr.required("d"))),
                                      wr.int_list("partition", wr.required("partition"))};
  }
  return e;
}

// Exact comparison first, then modulo f -> f + c. Mismatches report the raw
// coefficients at the first index where the normalized series differ.
MatchReport compare_shifted(const IntegerSeries& a, const IntegerSeries& b, std::size_t upto) {
  MatchReport raw = compare_series(a, b, upto);
  if (raw.match) return raw;
  MatchReport r = compare_series(normalize_shift(a.truncated(upto)), normalize_shift(b.truncated(upto)), upto);
  if (r.match) {
    r.up_to_shift = true;
  } else {
    r.lhs = a[*r.index];
    r.rhs = b[*r.index];
  }
  return r;
}

}  // namespace

const std::vector<std::string>& corpus_variables() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

LaurentPolynomial entry_polynomial(const FanoEntry& e) { return to_laurent(parse(e.polynomial), corpus_variables()); }

LaurentPolynomial alternate_polynomial(const FanoEntry& e, std::size_t i) {
  if (i >= e.alternates.size()) throw InvalidArgument("entry has no alternate " + std::to_string(i));
  return to_laurent(parse(e.alternates[i]), corpus_variables());
}

const std::vector<FanoEntry>& builtin_corpus() {
  static const std::vector<FanoEntry> corpus = parse_corpus(detail::kBuiltinCorpus);
  return corpus;
}

std::vector<FanoEntry> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw SchemaError("corpus: top-level field 'entries' must be an array");
  }
  std::map<int, FanoEntry> by_id;
  std::size_t position = 0;
  for (const auto& j : doc["entries"]) {
    FanoEntry e = read_entry(j, position++);
    if (e.id < 1 || e.id > static_cast<int>(kCorpusSize)) {
      throw SchemaError("entry " + std::to_string(e.id) + ": field 'id' must be between 1 and 17");
    }
    const int id = e.id;
    if (!by_id.emplace(id, std::move(e)).second) {
      throw SchemaError("entry " + std::to_string(id) + ": field 'id' is duplicated");
    }
  }
  std::vector<FanoEntry> out;
  for (int id = 1; id <= static_cast<int>(kCorpusSize); ++id) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw SchemaError("entry " + std::to_string(id) + ": field 'id' not present in corpus");
    out.push_back(std::move(it->second));
  }
  return out;
}

std::vector<FanoEntry> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

const FanoEntry& find_entry(const std::vector<FanoEntry>& corpus, int id) {
  for (const auto& e : corpus) {
    if (e.id == id) return e;
  }
  throw InvalidArgument("no corpus entry with id " + std::to_string(id));
}

bool VerificationReport::passed() const {
  if (reference && !reference->match) return false;
  if (closed_form && !closed_form->match) return false;
  for (const auto& a : alternates) {
    if (!a.match.match) return false;
  }
  return semiweak.semiweak && origin_interior;
}

VerificationReport verify_entry(const FanoEntry& e, std::size_t terms) {
  if (terms < 6) throw InvalidArgument("verification needs at least 6 terms, got " + std::to_string(terms));
  VerificationReport r;
  r.id = e.id;
  r.terms = terms;
  const LaurentPolynomial f = entry_polynomial(e);
  r.series = constant_term_series(f, terms);

  if (e.reference_series) {
    const std::size_t upto = std::min(terms, e.reference_series->coeffs.order());
    r.reference = compare_shifted(r.series, e.reference_series->coeffs, upto);
  }
  if (e.ci) r.closed_form = compare_shifted(r.series, ci_period_closed_form(e.ci->ambient_dim, e.ci->degrees, terms), terms);
  for (std::size_t i = 0; i < e.alternates.size(); ++i) {
    AlternateCheck a;
    a.polynomial = e.alternates[i];
    a.series = constant_term_series(alternate_polynomial(e, i), terms);
    a.match = compare_shifted(r.series, a.series, terms);
    r.alternates.push_back(std::move(a));
  }
  r.semiweak = semiweak_check(f, e.degree);
  r.origin_interior = r.semiweak.origin_interior;
  return r;
}

std::vector<VerificationReport> verify_all(const std::vector<FanoEntry>& corpus, std::size_t terms) {
  std::vector<std::future<VerificationReport>> jobs;
  jobs.reserve(corpus.size());
  for (const auto& e : corpus) jobs.push_back(std::async(std::launch::async, [&e, terms] { return verify_entry(e, terms); }));
  std::vector<VerificationReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace lgm
