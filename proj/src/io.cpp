#include "bihom/io.hpp"

#include <fstream>
#include <sstream>

namespace bihom::io {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& reason) {
  throw Error(ErrorKind::ValidationError, field + ": " + reason);
}

[[noreturn]] void bad_parse(const std::string& path, const std::string& reason) {
  throw Error(ErrorKind::ParseError, path + ": " + reason);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) invalid(path + key, "missing");
  return j.at(key);
}

Scalar scalar_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad_parse(path, "expected a rational string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) throw;
    bad_parse(path, "bad rational \"" + j.get<std::string>() + "\"");
  }
}

std::size_t index_at(const Json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_unsigned()) bad_parse(path, "expected a basis index");
  const auto i = j.get<std::size_t>();
  if (i >= bound) invalid(path, "index out of range");
  return i;
}

Matrix matrix_at(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) bad_parse(path, "expected a matrix");
  if (j.size() != rows) invalid(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    const std::string rp = path + "/" + std::to_string(r);
    if (!row.is_array()) bad_parse(rp, "expected a row");
    if (row.size() != cols) invalid(rp, "expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_at(row[c], rp + "/" + std::to_string(c));
  }
  return m;
}

Vec vector_at(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) bad_parse(path, "expected a vector");
  if (j.size() != n) invalid(path, "expected length " + std::to_string(n));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_at(j[i], path + "/" + std::to_string(i));
  return v;
}

/// {"label": "p/q", ...} over the given space.
Vec labelled_at(const Json& j, const GradedSpace& s, const std::string& path) {
  if (!j.is_object()) bad_parse(path, "expected {label: rational}");
  Vec v(s.dim());
  for (const auto& [label, value] : j.items()) {
    const auto k = s.index_of(label);
    if (!k) invalid(path + "/" + label, "unknown basis label");
    v[*k] = scalar_at(value, path + "/" + label);
  }
  return v;
}

GradedSpace space_at(const Json& j, const std::string& path, std::optional<std::size_t> dim) {
  const Json& par = need(j, "parity", path);
  if (!par.is_array()) bad_parse(path + "parity", "expected a list");
  std::vector<unsigned> p;
  for (std::size_t i = 0; i < par.size(); ++i) {
    if (!par[i].is_number_unsigned() || par[i].get<unsigned>() > 1)
      invalid(path + "parity/" + std::to_string(i), "parity must be 0 or 1");
    p.push_back(par[i].get<unsigned>());
  }
  if (dim && p.size() != *dim) invalid(path + "parity", "length mismatch");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != p.size()) invalid(path + "basis", "length mismatch");
    for (const auto& n : b) {
      if (!n.is_string()) bad_parse(path + "basis", "labels must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  try {
    return GradedSpace(p, names);
  } catch (const Error& e) {
    invalid(path + "basis", e.what());
  }
}

template <std::size_t Arity>
Bracket<Arity> bracket_at(const Json& j, const GradedSpace& args, const GradedSpace& out, const std::string& path) {
  if (!j.is_array()) bad_parse(path, "expected a list of entries");
  Bracket<Arity> b(args.dim(), out.dim());
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = path + "/" + std::to_string(e);
    const Json& a = need(j[e], "args", ep + "/");
    if (!a.is_array() || a.size() != Arity) invalid(ep + "/args", "expected " + std::to_string(Arity) + " indices");
    typename Bracket<Arity>::Index idx{};
    for (std::size_t k = 0; k < Arity; ++k) idx[k] = index_at(a[k], args.dim(), ep + "/args/" + std::to_string(k));
    if (!b.at(idx).empty()) invalid(ep + "/args", "duplicate entry");
    b.set(idx, labelled_at(need(j[e], "out", ep + "/"), out, ep + "/out"));
  }
  return b;
}

EvenMap map_at(const Json& j, const GradedSpace& s, const std::string& path) {
  if (j.is_null()) return EvenMap::identity(s);
  try {
    return EvenMap(matrix_at(j, s.dim(), s.dim(), path), s);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OddMap) invalid(path, "map is not even");
    throw;
  }
}

Json rational(const Scalar& s) { return s.str(); }

Json space_json(Json& out, const GradedSpace& s) {
  out["parity"] = s.parities();
  out["basis"] = s.names();
  return out;
}

template <std::size_t Arity>
Json entries_json(const Bracket<Arity>& b, const GradedSpace& out, bool canonical_only) {
  Json list = Json::array();
  for (const auto& idx : b.support()) {
    if (canonical_only && !std::is_sorted(idx.begin(), idx.end())) continue;
    Json e;
    e["args"] = idx;
    Json o = Json::object();
    for (const auto& [k, c] : b.at(idx)) o[out.name(k)] = rational(c);
    e["out"] = o;
    list.push_back(e);
  }
  return list;
}

/// Whether the sorted-argument entries determine b by super-skewsymmetry.
template <std::size_t Arity>
bool skew_determined(const Bracket<Arity>& b, const GradedSpace& s) {
  Bracket<Arity> reps(b.dim(), b.out_dim());
  for (const auto& idx : b.support())
    if (std::is_sorted(idx.begin(), idx.end())) reps.set(idx, b.at(idx));
  try {
    return skew_extend(reps, s) == b;
  } catch (const Error&) {
    return false;
  }
}

template <std::size_t Arity>
void write_bracket(Json& out, const Bracket<Arity>& b, const GradedSpace& s) {
  const bool skew = skew_determined(b, s);
  if (skew) out["bracket_symmetry"] = "super-skew";
  out["bracket"] = entries_json(b, s, skew);
}

template <std::size_t Arity>
Bracket<Arity> read_bracket(const Json& j, const GradedSpace& s) {
  Bracket<Arity> b = bracket_at<Arity>(need(j, "bracket", "/"), s, s, "/bracket");
  if (j.contains("bracket_symmetry")) {
    if (j.at("bracket_symmetry") != "super-skew") invalid("/bracket_symmetry", "only \"super-skew\" is supported");
    b = skew_extend(b, s);
  }
  try {
    b.check_even(s);
  } catch (const Error& e) {
    invalid("/bracket", e.what());
  }
  return b;
}

}  // namespace

const GradedSpace& AlgebraFile::space() const {
  if (binary) return binary->space;
  if (associative) return associative->space;
  return ternary->space;
}

AlgebraFile parse_algebra(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_parse("/", e.what());
  }
  if (!j.is_object()) bad_parse("/", "expected an object");
  AlgebraFile a;
  a.name = j.value("name", std::string());
  const Json& ar = need(j, "arity", "/");
  if (!ar.is_number_unsigned() || (ar.get<unsigned>() != 2 && ar.get<unsigned>() != 3))
    invalid("/arity", "must be 2 or 3");
  a.arity = ar.get<unsigned>();
  const Json& dj = need(j, "dim", "/");
  if (!dj.is_number_unsigned()) invalid("/dim", "must be a natural number");
  const std::size_t n = dj.get<std::size_t>();
  const GradedSpace s = space_at(j, "/", n);
  const EvenMap alpha = map_at(j.value("alpha", Json()), s, "/alpha");
  const EvenMap beta = map_at(j.value("beta", Json()), s, "/beta");
  const std::string kind = j.value("kind", std::string("lie"));
  if (kind != "lie" && kind != "associative") invalid("/kind", "must be \"lie\" or \"associative\"");

  if (a.arity == 2) {
    if (kind != "lie") invalid("/kind", "binary files describe Lie superalgebras");
    a.binary = BihomLieSuper2{s, read_bracket<2>(j, s), alpha, beta};
  } else if (kind == "associative") {
    TriBracket mu = bracket_at<3>(need(j, "bracket", "/"), s, s, "/bracket");
    a.associative = TotAssoc3{s, std::move(mu), alpha, beta};
  } else {
    a.ternary = ThreeBihomLieSuper{s, read_bracket<3>(j, s), alpha, beta};
  }

  if (j.contains("twist")) {
    const Json& t = j.at("twist");
    a.twist = {map_at(need(t, "a", "/twist/"), s, "/twist/a").matrix(),
               map_at(need(t, "b", "/twist/"), s, "/twist/b").matrix()};
  }
  if (j.contains("form")) a.form = SuperForm{matrix_at(j.at("form"), n, n, "/form")};
  if (j.contains("subspaces")) {
    const Json& ss = j.at("subspaces");
    if (!ss.is_object()) bad_parse("/subspaces", "expected {name: [vectors]}");
    for (const auto& [name, vecs] : ss.items()) {
      const std::string sp = "/subspaces/" + name;
      if (!vecs.is_array()) bad_parse(sp, "expected a list of vectors");
      std::vector<Vec> vs;
      for (std::size_t k = 0; k < vecs.size(); ++k) vs.push_back(vector_at(vecs[k], n, sp + "/" + std::to_string(k)));
      try {
        a.subspaces.emplace_back(name, Subspace(n, vs));
      } catch (const Error&) {
        invalid(sp, "vectors are linearly dependent");
      }
    }
  }

  const bool needs_module = j.contains("rho") || j.contains("theta") || j.contains("f");
  if (needs_module && !j.contains("module")) invalid("/module", "required by rho, theta or f");
  if (j.contains("module")) {
    if (!a.ternary) invalid("/module", "only ternary Lie files carry a module");
    const Json& m = j.at("module");
    if (m.is_string()) {
      a.module_kind = m.get<std::string>();
      if (a.module_kind == "adjoint")
        a.module = adjoint(*a.ternary);
      else if (a.module_kind == "coadjoint")
        a.module = coadjoint(*a.ternary);
      else
        invalid("/module", "must be \"adjoint\", \"coadjoint\" or an object");
      if (j.contains("rho")) invalid("/rho", "not allowed with a named module");
    } else {
      a.module_kind = "explicit";
      const Json& dm = need(m, "dim", "/module/");
      if (!dm.is_number_unsigned()) invalid("/module/dim", "must be a natural number");
      const std::size_t md = dm.get<std::size_t>();
      const GradedSpace ms = space_at(m, "/module/", md);
      const EvenMap am = map_at(m.value("alpha", Json()), ms, "/module/alpha");
      const EvenMap bm = map_at(m.value("beta", Json()), ms, "/module/beta");
      std::vector<Representation::Entry> entries;
      if (j.contains("rho")) {
        const Json& r = j.at("rho");
        if (!r.is_array()) bad_parse("/rho", "expected a list of entries");
        for (std::size_t e = 0; e < r.size(); ++e) {
          const std::string ep = "/rho/" + std::to_string(e);
          const Json& args = need(r[e], "args", ep + "/");
          if (!args.is_array() || args.size() != 2) invalid(ep + "/args", "expected 2 indices");
          entries.push_back({{index_at(args[0], n, ep + "/args/0"), index_at(args[1], n, ep + "/args/1")},
                             matrix_at(need(r[e], "matrix", ep + "/"), md, md, ep + "/matrix")});
        }
      }
      try {
        a.module = Representation::from_pairs(s, ms, entries, am, bm);
      } catch (const Error& e) {
        invalid("/rho", e.what());
      }
    }
    const GradedSpace& ms = a.module->module;
    if (j.contains("theta")) a.theta = bracket_at<3>(j.at("theta"), s, ms, "/theta");
    if (j.contains("f")) {
      try {
        a.f = matrix_at(j.at("f"), ms.dim(), n, "/f");
        EvenMap(*a.f, s, ms);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OddMap) throw;
        invalid("/f", "map is not even");
      }
    }
  }
  return a;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

Json render(const AlgebraFile& a) {
  Json j;
  j["name"] = a.name;
  j["arity"] = a.arity;
  if (a.associative) j["kind"] = "associative";
  const GradedSpace& s = a.space();
  j["dim"] = s.dim();
  space_json(j, s);
  const EvenMap* alpha = nullptr;
  const EvenMap* beta = nullptr;
  if (a.binary) {
    write_bracket(j, a.binary->bracket, s);
    alpha = &a.binary->alpha;
    beta = &a.binary->beta;
  } else if (a.associative) {
    j["bracket"] = entries_json(a.associative->mu, s, false);
    alpha = &a.associative->alpha;
    beta = &a.associative->beta;
  } else {
    write_bracket(j, a.ternary->bracket, s);
    alpha = &a.ternary->alpha;
    beta = &a.ternary->beta;
  }
  j["alpha"] = render_matrix(alpha->matrix());
  j["beta"] = render_matrix(beta->matrix());
  if (a.twist) j["twist"] = {{"a", render_matrix(a.twist->first)}, {"b", render_matrix(a.twist->second)}};
  if (a.form) j["form"] = render_matrix(a.form->gram);
  if (!a.subspaces.empty()) {
    Json ss = Json::object();
    for (const auto& [name, sub] : a.subspaces) ss[name] = render_subspace(sub);
    j["subspaces"] = ss;
  }
  if (a.module) {
    const Representation& r = *a.module;
    if (a.module_kind == "explicit") {
      Json m;
      m["dim"] = r.module.dim();
      space_json(m, r.module);
      m["alpha"] = render_matrix(r.alpha_M.matrix());
      m["beta"] = render_matrix(r.beta_M.matrix());
      j["module"] = m;
      Json rho = Json::array();
      for (std::size_t x = 0; x < r.algebra_dim; ++x)
        for (std::size_t y = x; y < r.algebra_dim; ++y)
          if (!r.at(x, y).is_zero()) rho.push_back({{"args", {x, y}}, {"matrix", render_matrix(r.at(x, y))}});
      j["rho"] = rho;
    } else {
      j["module"] = a.module_kind;
    }
    if (a.theta) j["theta"] = entries_json(*a.theta, r.module, false);
    if (a.f) j["f"] = render_matrix(*a.f);
  }
  return j;
}

AlgebraFile bundle(std::string name, ThreeBihomLieSuper g) {
  AlgebraFile a;
  a.name = std::move(name);
  a.arity = 3;
  a.ternary = std::move(g);
  return a;
}

AlgebraFile bundle(std::string name, BihomLieSuper2 g) {
  AlgebraFile a;
  a.name = std::move(name);
  a.arity = 2;
  a.binary = std::move(g);
  return a;
}

AlgebraFile bundle(std::string name, const QuadraticAlgebra& qa) {
  AlgebraFile a = bundle(std::move(name), qa.algebra);
  a.form = qa.form;
  return a;
}

namespace {

void pretty_into(std::string& out, const Json& j, std::size_t indent, std::size_t width) {
  if (!j.is_structured() || j.empty()) {
    out += j.dump();
    return;
  }
  const bool fits = indent + j.dump().size() <= width;
  const std::string pad(indent + 2, ' ');
  out += j.is_array() ? "[" : "{";
  bool first = true;
  if (j.is_array()) {
    for (const auto& v : j) {
      out += first ? "" : ",";
      out += fits ? (first ? "" : " ") : "\n" + pad;
      pretty_into(out, v, indent + 2, width);
      first = false;
    }
  } else {
    for (const auto& [k, v] : j.items()) {
      out += first ? "" : ",";
      out += fits ? (first ? "" : " ") : "\n" + pad;
      out += Json(k).dump() + ": ";
      pretty_into(out, v, indent + 2, width);
      first = false;
    }
  }
  if (!fits) out += "\n" + std::string(indent, ' ');
  out += j.is_array() ? "]" : "}";
}

}  // namespace

std::string pretty(const Json& j, std::size_t width) {
  std::string out;
  pretty_into(out, j, 0, width);
  return out;
}

Json render_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json render_subspace(const Subspace& s) {
  Json vs = Json::array();
  for (const auto& v : s.basis()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational(x));
    vs.push_back(row);
  }
  return vs;
}

Json render_report(const VerificationReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["overall"] = r.overall() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    if (c.informational) cj["informational"] = true;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.witness) {
      Json res = Json::array();
      for (const auto& x : c.witness->residual) res.push_back(rational(x));
      cj["witness"] = {{"tuple", c.witness->tuple}, {"residual", res}};
    }
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string render_vector(const GradedSpace& space, const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool neg = v[k].sign() < 0;
    const std::string mag = (neg ? -v[k] : v[k]).str();
    if (out.empty())
      out = (neg ? "-" : "") + mag + " " + space.name(k);
    else
      out += (neg ? " - " : " + ") + mag + " " + space.name(k);
  }
  return out.empty() ? "0" : out;
}

template <std::size_t Arity>
std::vector<std::string> bracket_table(const GradedSpace& space, const Bracket<Arity>& b) {
  std::vector<std::string> lines;
  for (const auto& idx : b.support()) {
    std::string l = "[";
    for (std::size_t k = 0; k < Arity; ++k) l += (k ? "," : "") + space.name(idx[k]);
    lines.push_back(l + "] = " + render_vector(space, b.eval(idx)));
  }
  return lines;
}

template std::vector<std::string> bracket_table<2>(const GradedSpace&, const Bracket<2>&);
template std::vector<std::string> bracket_table<3>(const GradedSpace&, const Bracket<3>&);

}  // namespace bihom::io
