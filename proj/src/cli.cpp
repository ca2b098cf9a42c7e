#include "bihom/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "bihom/io.hpp"

namespace bihom::cli {

namespace {

using io::Json;

struct Options {
  std::vector<std::string> files;
  std::string lambda, mu, ideal, out;
  unsigned k = 0, r = 0, s = 0;
  int parity = -1;
  bool lift = false, allow_odd = false;
};

/// Result of one command: the JSON body and whether a mathematical check failed.
struct Outcome {
  Json body;
  bool failed = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DivisionByZero:
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::ZeroParameter:
    case ErrorKind::OddMap:
    case ErrorKind::UnknownCommand:
      return 2;
    default:
      return 1;
  }
}

const ThreeBihomLieSuper& ternary(const io::AlgebraFile& a) {
  if (!a.ternary) throw Error(ErrorKind::ValidationError, "arity: expected a ternary Lie file");
  return *a.ternary;
}

const Representation& module_of(const io::AlgebraFile& a) {
  if (!a.module) throw Error(ErrorKind::ValidationError, "module: missing");
  return *a.module;
}

Scalar parse_param(const std::string& s, const char* what) {
  if (s.empty()) return Scalar(1);
  try {
    return Scalar::parse(s);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(what) + ": " + e.what());
  }
}

void attach(Outcome& o, const VerificationReport& r) {
  Json rep = io::render_report(r);
  for (auto& [k, v] : rep.items()) o.body[k] = v;
  o.failed = o.failed || !r.overall();
}

void emit(Outcome& o, const Options& opt, const io::AlgebraFile& result) {
  const Json doc = io::render(result);
  o.body["algebra"] = doc;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::ValidationError, "out: cannot write " + opt.out);
    f << io::pretty(doc) << "\n";
  }
}

template <std::size_t Arity>
Json table(const GradedSpace& s, const Bracket<Arity>& b) {
  return io::bracket_table(s, b);
}

Json series_json(const std::vector<Subspace>& chain) {
  Json dims = Json::array();
  for (const auto& c : chain) dims.push_back(c.dim());
  return dims;
}

Json verdict_json(const SeriesVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.holds) j["length"] = v.length;
  return j;
}

CocycleTensor theta_or_zero(const io::AlgebraFile& a, const ThreeBihomLieSuper& g, const Representation& r) {
  return a.theta ? *a.theta : zero_cocycle(g, r);
}

/// θ for T*-constructions: must be valued in the coadjoint module when present.
CocycleTensor tstar_theta(const io::AlgebraFile& a, const ThreeBihomLieSuper& g) {
  if (!a.theta) return zero_cocycle(g, coadjoint(g));
  if (a.module_kind != "coadjoint") throw Error(ErrorKind::ValidationError, "module: T* theta needs \"coadjoint\"");
  return *a.theta;
}

Outcome cmd_verify(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  Outcome out;
  VerificationReport rep;
  if (a.binary) {
    rep = verify2(*a.binary);
  } else if (a.associative) {
    rep = verify_tot_assoc(*a.associative);
  } else {
    rep = verify3(*a.ternary);
    if (a.form) rep.merge(verify_quadratic({*a.ternary, *a.form}), "quadratic-");
    if (a.module) rep.merge(verify_rep(*a.ternary, *a.module), "representation-");
    if (a.theta) rep.merge(verify_cocycle(*a.ternary, *a.module, *a.theta), "cocycle-");
  }
  rep.subject = a.name;
  attach(out, rep);
  return out;
}

Outcome cmd_twist(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  Outcome out;
  if (a.binary) {
    BihomLieSuper2 t;
    if (!o.lambda.empty() || !o.mu.empty()) {
      const auto& s = a.binary->space;
      if (s.names() != std::vector<std::string>{"H", "X", "Y", "F", "G"})
        throw Error(ErrorKind::ValidationError, "basis: --lambda/--mu need the osp(1,2) basis H,X,Y,F,G");
      t = yau_twist2(*a.binary, osp12_alpha(parse_param(o.lambda, "lambda")), osp12_alpha(parse_param(o.mu, "mu")));
    } else if (a.twist) {
      t = yau_twist2(*a.binary, EvenMap(a.twist->first, a.binary->space), EvenMap(a.twist->second, a.binary->space));
    } else {
      throw Error(ErrorKind::ValidationError, "twist: give --lambda/--mu or a twist block");
    }
    out.body["table"] = table(t.space, t.bracket);
    attach(out, verify2(t));
    emit(out, o, io::bundle(a.name + "-twisted", t));
    return out;
  }
  const auto& g = ternary(a);
  ThreeBihomLieSuper t;
  if (o.k > 0) {
    t = twist_power_k(g, o.k);
  } else if (a.twist) {
    const EvenMap ta(a.twist->first, g.space), tb(a.twist->second, g.space);
    const bool plain = g.alpha.matrix() == Matrix::identity(g.dim()) && g.beta.matrix() == Matrix::identity(g.dim());
    t = plain ? twist_from_3lie(g, ta, tb) : twist_compose(g, ta, tb);
  } else {
    throw Error(ErrorKind::ValidationError, "twist: give --k or a twist block");
  }
  out.body["table"] = table(t.space, t.bracket);
  attach(out, verify3(t));
  emit(out, o, io::bundle(a.name + "-twisted", t));
  return out;
}

Outcome cmd_sum(const Options& o) {
  if (o.files.size() != 2) throw Error(ErrorKind::ValidationError, "sum: expects two files");
  const auto a = io::load_algebra(o.files[0]), b = io::load_algebra(o.files[1]);
  const auto t = direct_sum(ternary(a), ternary(b));
  Outcome out;
  attach(out, verify3(t));
  emit(out, o, io::bundle(a.name + "+" + b.name, t));
  return out;
}

Outcome cmd_tensor(const Options& o) {
  if (o.files.size() != 2) throw Error(ErrorKind::ValidationError, "tensor: expects an associative file and a Lie file");
  const auto a = io::load_algebra(o.files[0]), b = io::load_algebra(o.files[1]);
  if (!a.associative) throw Error(ErrorKind::ValidationError, "kind: first file must be associative");
  const auto t = tensor_assoc(*a.associative, ternary(b), TensorOptions{o.allow_odd});
  Outcome out;
  attach(out, verify3(t));
  emit(out, o, io::bundle(a.name + "*" + b.name, t));
  return out;
}

Outcome cmd_semidirect(const Options& o, bool with_theta) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  const auto& r = module_of(a);
  const auto t = with_theta ? t_theta_extension(g, r, theta_or_zero(a, g, r)) : semidirect(g, r);
  Outcome out;
  attach(out, verify3(t));
  emit(out, o, io::bundle(a.name + (with_theta ? "-t-theta" : "-semidirect"), t));
  return out;
}

Outcome cmd_theta_f(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  const auto& r = module_of(a);
  if (!a.f) throw Error(ErrorKind::ValidationError, "f: missing");
  const auto th = coboundary_theta_f(g, r, EvenMap(*a.f, g.space, r.module));
  Outcome out;
  Json lines = Json::array();
  for (const auto& idx : th.support())
    lines.push_back("θ(" + g.space.name(idx[0]) + "," + g.space.name(idx[1]) + "," + g.space.name(idx[2]) +
                    ") = " + io::render_vector(r.module, th.eval(idx)));
  out.body["theta"] = lines;
  attach(out, verify_cocycle(g, r, th));
  return out;
}

Outcome cmd_sigma(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  const auto& r = module_of(a);
  if (!a.f) throw Error(ErrorKind::ValidationError, "f: missing");
  const auto res = sigma_iso(g, r, theta_or_zero(a, g, r), EvenMap(*a.f, g.space, r.module));
  Outcome out;
  out.body["sigma"] = io::render_matrix(res.sigma.matrix());
  attach(out, res.report);
  return out;
}

Outcome cmd_dual(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  const auto res = dual_rep(g, a.module ? *a.module : adjoint(g));
  Outcome out;
  attach(out, res.report);
  io::AlgebraFile d = io::bundle(a.name, g);
  d.module_kind = "explicit";
  d.module = res.dual;
  emit(out, o, d);
  return out;
}

Outcome cmd_tstar(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  const auto qa = tstar_extension(g, tstar_theta(a, g));
  Outcome out;
  VerificationReport rep = verify3(qa.algebra);
  rep.merge(verify_quadratic(qa), "quadratic-");
  attach(out, rep);
  io::AlgebraFile t = io::bundle("T*(" + a.name + ")", qa);
  std::vector<Vec> dual;
  for (std::size_t i = 0; i < g.dim(); ++i) dual.push_back(unit_vec(2 * g.dim(), g.dim() + i));
  t.subspaces.emplace_back("dual", Subspace(2 * g.dim(), dual));
  emit(out, o, t);
  return out;
}

Outcome cmd_series(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  Outcome out;
  out.body["derived_series_dims"] = series_json(derived_series(g));
  out.body["central_series_dims"] = series_json(central_series(g));
  out.body["solvable"] = verdict_json(is_solvable(g));
  out.body["nilpotent"] = verdict_json(is_nilpotent(g));
  if (o.lift) attach(out, series_lift_check(g, tstar_theta(a, g)));
  return out;
}

Outcome cmd_derivations(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  Outcome out;
  out.body["s"] = o.s;
  out.body["r"] = o.r;
  Json spaces = Json::array();
  for (unsigned p = 0; p < 2; ++p) {
    if (o.parity >= 0 && static_cast<unsigned>(o.parity) != p) continue;
    const auto basis = derivation_space(g, DerivationRequest{o.r, o.s, p});
    Json maps = Json::array();
    for (const auto& d : basis) maps.push_back(io::render_matrix(d.matrix()));
    spaces.push_back({{"parity", p}, {"dim", basis.size()}, {"basis", maps}});
  }
  out.body["derivations"] = spaces;
  return out;
}

Outcome cmd_center(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  Outcome out;
  const auto z = center(g), az = ab_center(g);
  out.body["center"] = {{"dim", z.dim()}, {"basis", io::render_subspace(z)}};
  out.body["ab_center"] = {{"dim", az.dim()}, {"basis", io::render_subspace(az)}};
  return out;
}

Outcome cmd_reconstruct(const Options& o) {
  const auto a = io::load_algebra(o.files.at(0));
  const auto& g = ternary(a);
  if (!a.form) throw Error(ErrorKind::ValidationError, "form: missing");
  if (o.ideal.empty()) throw Error(ErrorKind::ValidationError, "ideal: --ideal is required");
  std::optional<Subspace> ideal;
  for (const auto& [name, sub] : a.subspaces)
    if (name == o.ideal) ideal = sub;
  if (!ideal && o.ideal == "dual") {
    if (g.dim() % 2 != 0) throw Error(ErrorKind::ValidationError, "ideal: \"dual\" needs even dimension");
    const std::size_t n = g.dim() / 2;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(g.dim(), n + i));
    ideal = Subspace(g.dim(), basis);
  }
  if (!ideal) throw Error(ErrorKind::ValidationError, "ideal: no subspace named " + o.ideal);
  const auto res = reconstruct_tstar({g, *a.form}, *ideal);
  Outcome out;
  attach(out, res.report);
  out.body["complement"] = io::render_subspace(res.complement);
  out.body["phi"] = io::render_matrix(res.phi.matrix());
  io::AlgebraFile b = io::bundle(a.name + "/I", res.quotient);
  b.module_kind = "coadjoint";
  b.module = coadjoint(res.quotient);
  b.theta = res.theta;
  emit(out, o, b);
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::string> commands{
      {"verify", "Verify the structure described by a file"},
      {"twist", "Yau twist (--lambda/--mu for osp(1,2), --k for powers, or the file's twist block)"},
      {"sum", "Direct sum of two ternary algebras"},
      {"tensor", "Tensor product of a totally associative algebra with a ternary algebra"},
      {"semidirect", "Semidirect product with the file's module"},
      {"t-theta", "T_theta extension by the file's module and theta"},
      {"theta-f", "Coboundary theta_f from the file's f"},
      {"sigma", "Isomorphism T_theta -> T_{theta+theta_f}"},
      {"dual", "Dual of the file's module (default: adjoint) and the theorem conditions"},
      {"tstar", "T*_theta extension with its invariant form"},
      {"series", "Derived and central series"},
      {"derivations", "Space of (alpha^s beta^r)-derivations"},
      {"center", "Center and (alpha,beta)-center"},
      {"reconstruct", "Recover (B, theta) from a quadratic algebra and an isotropic ideal"},
  };
  if (args.empty()) {
    err << "usage: bihomlie <command> <file>... [options]\n";
    return 2;
  }
  const std::string& command = args.front();
  if (command == "--help" || command == "-h") {
    for (const auto& [name, help] : commands) out << "  " << name << "  " << help << "\n";
    return 0;
  }
  Json doc;
  doc["command"] = command;
  try {
    if (!commands.count(command)) throw Error(ErrorKind::UnknownCommand, command);
    Options o;
    CLI::App app(commands.at(command), "bihomlie " + command);
    app.add_option("files", o.files, "Input JSON files")->required();
    app.add_option("--lambda", o.lambda, "Twist parameter lambda (p/q)");
    app.add_option("--mu", o.mu, "Twist parameter mu (p/q)");
    app.add_option("--k", o.k, "Twist power");
    app.add_option("--r", o.r, "Power of beta");
    app.add_option("--s", o.s, "Power of alpha");
    app.add_option("--parity", o.parity, "Restrict derivations to parity 0 or 1");
    app.add_option("--ideal", o.ideal, "Subspace name from the file, or \"dual\"");
    app.add_option("--out", o.out, "Write the constructed algebra here");
    app.add_flag("--lift", o.lift, "Also check series lifting to T*");
    app.add_flag("--allow-odd", o.allow_odd, "Allow an associative factor with odd elements");
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
      app.parse(rest);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    static const std::map<std::string, std::function<Outcome(const Options&)>> run{
        {"verify", cmd_verify},
        {"twist", cmd_twist},
        {"sum", cmd_sum},
        {"tensor", cmd_tensor},
        {"semidirect", [](const Options& x) { return cmd_semidirect(x, false); }},
        {"t-theta", [](const Options& x) { return cmd_semidirect(x, true); }},
        {"theta-f", cmd_theta_f},
        {"sigma", cmd_sigma},
        {"dual", cmd_dual},
        {"tstar", cmd_tstar},
        {"series", cmd_series},
        {"derivations", cmd_derivations},
        {"center", cmd_center},
        {"reconstruct", cmd_reconstruct},
    };
    Outcome res = run.at(command)(o);
    for (auto& [k, v] : res.body.items()) doc[k] = v;
    out << io::pretty(doc) << "\n";
    return res.failed ? 1 : 0;
  } catch (const Error& e) {
    doc["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (!e.witness().empty()) doc["error"]["witness"] = e.witness();
    out << io::pretty(doc) << "\n";
    err << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    doc["error"] = {{"kind", "InputError"}, {"message", e.what()}};
    out << io::pretty(doc) << "\n";
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace bihom::cli
