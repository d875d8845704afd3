#include "cli.hpp"

#include "itcalc/error.hpp"
#include "itcalc/homotopy.hpp"
#include "itcalc/itcore.hpp"
#include "itcalc/relstruct.hpp"
#include "itcalc/textio.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace itcalc::cli {

using nlohmann::json;

namespace {

struct Context {
  Settings settings;
  int horizon = kDefaultHorizon;
  ModuleContext modules;
};

std::uint64_t parse_seed(const std::optional<std::string>& text) {
  if (!text || *text == "default") return kDefaultSeed;
  if (*text == "random") {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
  }
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(*text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text->size() || text->front() == '-') {
    throw Error(ErrorKind::InvalidInput, "seed must be a 64-bit integer or 'random', got '" + *text + "'");
  }
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

json dims_of(const Rep& m) { return json(m.dims()); }

json describe(const Rep& indecomposable) {
  json j;
  const auto name = standard_name(indecomposable);
  j["name"] = name ? json(*name) : json(nullptr);
  j["dims"] = dims_of(indecomposable);
  return j;
}

json summands_of(const Rep& m, const RelStructure* f, const Settings& settings) {
  json out = json::array();
  for (const auto& c : decompose(m, settings)) {
    json j = describe(c.module);
    j["multiplicity"] = c.multiplicity;
    if (f) j["F_projective"] = f->index_of(c.module).has_value();
    out.push_back(std::move(j));
  }
  return out;
}

json phi_json(Registry& reg, const PhiResult& r) {
  json j;
  j["certified"] = r.certified;
  j["rank_sequence"] = r.rank_sequence;
  j["closure_level"] = r.closure_level ? json(*r.closure_level) : json(nullptr);
  j["support_size"] = r.support_size;
  json gens = json::array();
  for (int id : r.generators) gens.push_back(describe(reg.representative(id)));
  j["generators"] = std::move(gens);
  return j;
}

AlgebraPtr load_main_algebra(const Options& o) {
  require(!o.algebra.empty(), "--algebra is required");
  return load_algebra(o.algebra);
}

Rep expr(const Context& ctx, const std::string& text, const char* flag) {
  require(!text.empty(), std::string(flag) + " is required");
  return parse_module_expr(ctx.modules, text);
}

RelStructure structure(const Context& ctx, const std::string& generator) {
  const AlgebraPtr& a = ctx.modules.algebra;
  const Rep g = expr(ctx, generator, "--generator");
  const auto parts = decompose(g, ctx.settings);
  for (int v = 0; v < a->vertex_count(); ++v) {
    const Rep p = projective(a, v);
    const bool has = std::any_of(parts.begin(), parts.end(),
                                 [&](const Component& c) { return indecomposables_isomorphic(c.module, p); });
    require(has, "the generator must contain A (P(" + std::to_string(v + 1) + ") is missing)");
  }
  return RelStructure(a, g, ctx.settings);
}

Family family(const Context& ctx, const std::string& text) {
  if (text == "nakayama-all") return Family{true, {}};
  return Family{false, {expr(ctx, text, "--family")}};
}

Complex load_cpx(const Context& ctx, const Options& o) {
  require(!o.complex.empty(), "--complex is required");
  return load_complex(ctx.modules, o.complex);
}

json cmd_phi(const Context& ctx, const Options& o) {
  Registry reg{structure(ctx, o.generator)};
  const Rep m = expr(ctx, o.module, "--module");
  const PhiResult r = phi(reg, m, ctx.horizon);
  json j = phi_json(reg, r);
  j["phi"] = r.value;
  j["division"] = nullptr;
  if (r.certified) {
    if (const auto div = find_d_division(reg, m, ctx.horizon)) {
      auto side = [&](const std::vector<std::pair<int, BigInt>>& parts) {
        json out = json::array();
        for (const auto& [id, c] : parts) {
          json x = describe(reg.representative(id));
          x["multiplicity"] = static_cast<std::int64_t>(c);
          out.push_back(std::move(x));
        }
        return out;
      };
      j["division"] = {{"d", div->d}, {"X", side(div->X)}, {"Y", side(div->Y)}};
    }
  }
  j["registry_size"] = reg.size();
  return j;
}

json cmd_phi_dim(const Context& ctx, const Options& o) {
  Registry reg{structure(ctx, o.generator)};
  const PhiResult r = phi_dim(reg, family(ctx, o.family), ctx.horizon);
  json j = phi_json(reg, r);
  j["phi_dim"] = r.value;
  return j;
}

json cmd_resolve(const Context& ctx, const Options& o) {
  require(o.length >= 0, "--length must be non-negative");
  const RelStructure f = structure(ctx, o.generator);
  const RelResolution res = F_resolution(f, expr(ctx, o.module, "--module"), o.length);
  json terms = json::array();
  for (std::size_t k = 0; k < res.terms.size(); ++k) {
    json t;
    t["degree"] = k;
    t["dims"] = dims_of(res.terms[k]);
    t["summands"] = summands_of(res.terms[k], nullptr, ctx.settings);
    terms.push_back(std::move(t));
  }
  json j;
  j["terms"] = std::move(terms);
  j["finite"] = res.finite;
  if (res.finite) {
    j["F_projective_dimension"] = res.terms.empty() ? 0 : res.terms.size() - 1;
  } else {
    j["F_projective_dimension"] = nullptr;
  }
  return j;
}

json cmd_ext(const Context& ctx, const Options& o) {
  require(o.degree >= 0, "--degree must be non-negative");
  const RelStructure f = structure(ctx, o.generator);
  json j;
  j["degree"] = o.degree;
  j["ext_dim"] = ext_F_dim(f, expr(ctx, o.module, "--module"), expr(ctx, o.target, "--target"), o.degree);
  return j;
}

json cmd_check_exact(const Context& ctx, const Options& o) {
  const RelStructure f = structure(ctx, o.generator);
  const Complex c = load_cpx(ctx, o);
  json j;
  j["exact"] = is_F_acyclic(RelStructure(ctx.modules.algebra, ctx.settings), c);
  j["F_exact"] = is_F_acyclic(f, c);
  return j;
}

json cmd_tilting_check(const Context& ctx, const Options& o) {
  const RelStructure f = structure(ctx, o.generator);
  const TiltingReport r = check_relative_tilting(f, load_cpx(ctx, o));
  json j;
  j["self_orthogonal"] = r.self_orthogonal;
  j["nonzero_shifts"] = r.nonzero_shifts;
  j["summand_count"] = r.summand_count;
  j["simple_count"] = r.simple_count;
  j["generation_heuristic"] = r.generation_heuristic;
  j["term_length"] = r.term_length;
  j["endomorphism_dim"] = r.endomorphism_dim;
  return j;
}

json cmd_verify_bound(const Context& ctx, const Options& o, int& exit_code) {
  const RelStructure f = structure(ctx, o.generator);
  const Complex t = load_cpx(ctx, o);
  require(!o.b_algebra.empty(), "--b-algebra is required");
  Context bctx = ctx;
  bctx.modules = ModuleContext{load_algebra(o.b_algebra), {}, ctx.modules.base_dir};
  const BoundReport r =
      verify_bound(f, t, bctx.modules.algebra, family(ctx, o.family), family(bctx, o.b_family), ctx.horizon);
  json j;
  j["L"] = r.L;
  j["R"] = r.R;
  j["n"] = r.n;
  j["holds"] = r.holds;
  j["verdict"] = verdict_name(r.verdict);
  j["certified"] = r.left.certified && r.right.certified;
  j["lower_slack"] = r.lower_slack;
  j["upper_slack"] = r.upper_slack;
  j["endomorphism_dim"] = r.endomorphism_dim;
  j["dim_B"] = r.dim_B;
  j["left"] = {{"certified", r.left.certified},
               {"rank_sequence", r.left.rank_sequence},
               {"closure_level", r.left.closure_level ? json(*r.left.closure_level) : json(nullptr)}};
  j["right"] = {{"certified", r.right.certified},
                {"rank_sequence", r.right.rank_sequence},
                {"closure_level", r.right.closure_level ? json(*r.right.closure_level) : json(nullptr)}};
  j["warnings"] = r.warnings;
  if (r.verdict == Verdict::Violated) exit_code = kExitVerification;
  return j;
}

json cmd_decompose(const Context& ctx, const Options& o) {
  const RelStructure f = structure(ctx, o.generator);
  const Rep m = expr(ctx, o.module, "--module");
  json j;
  j["dims"] = dims_of(m);
  j["summands"] = summands_of(m, &f, ctx.settings);
  j["indecomposable"] = is_indecomposable(m, ctx.settings);
  return j;
}

json invocation(const Options& o, std::uint64_t seed, int horizon) {
  json j;
  j["command"] = o.command;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  put("algebra", o.algebra);
  put("b_algebra", o.b_algebra);
  if (!o.modules.empty()) j["modules"] = o.modules;
  put("module", o.module);
  put("target", o.target);
  put("generator", o.generator);
  put("family", o.family);
  put("b_family", o.b_family);
  put("complex", o.complex);
  j["degree"] = o.degree;
  j["length"] = o.length;
  j["horizon"] = horizon;
  j["seed"] = seed;
  return j;
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"phi",          "phi-dim",       "resolve",      "ext",
                                                 "check-exact",  "tilting-check", "verify-bound", "decompose"};
  return names;
}

std::optional<int> horizon_from_env() {
  const char* v = std::getenv("ITCALC_HORIZON");
  if (!v || !*v) return std::nullopt;
  std::size_t used = 0;
  int h = 0;
  try {
    h = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || v[used] != '\0') throw Error(ErrorKind::InvalidInput, std::string("ITCALC_HORIZON is not an integer: ") + v);
  return h;
}

Outcome run(const Options& o) {
  Outcome out;
  json& rep = out.report;
  rep["tool"] = "itcalc";
  rep["version"] = kVersion;
  rep["command"] = o.command;
  try {
    Context ctx;
    ctx.settings.seed = parse_seed(o.seed);
    const auto env = horizon_from_env();
    ctx.horizon = o.horizon ? *o.horizon : env ? *env : kDefaultHorizon;
    rep["seed"] = ctx.settings.seed;
    rep["horizon"] = ctx.horizon;
    rep["invocation"] = invocation(o, ctx.settings.seed, ctx.horizon);
    require(ctx.horizon >= 1, "horizon must be at least 1");
    require(std::find(commands().begin(), commands().end(), o.command) != commands().end(),
            "unknown command '" + o.command + "'");

    ctx.modules.algebra = load_main_algebra(o);
    for (const auto& path : o.modules) load_modules(ctx.modules, path);

    json result;
    if (o.command == "phi") {
      result = cmd_phi(ctx, o);
    } else if (o.command == "phi-dim") {
      result = cmd_phi_dim(ctx, o);
    } else if (o.command == "resolve") {
      result = cmd_resolve(ctx, o);
    } else if (o.command == "ext") {
      result = cmd_ext(ctx, o);
    } else if (o.command == "check-exact") {
      result = cmd_check_exact(ctx, o);
    } else if (o.command == "tilting-check") {
      result = cmd_tilting_check(ctx, o);
    } else if (o.command == "verify-bound") {
      result = cmd_verify_bound(ctx, o, out.exit_code);
    } else {
      result = cmd_decompose(ctx, o);
    }
    rep.update(result);
  } catch (const ParseError& e) {
    json err = error_object("ParseError", e.what());
    err["line"] = e.line();
    err["column"] = e.column();
    rep["error"] = std::move(err);
    out.exit_code = kExitInput;
  } catch (const Error& e) {
    rep["error"] = error_object(error_kind_name(e.kind()), e.what());
    out.exit_code = kExitInput;
  } catch (const std::logic_error& e) {
    rep["error"] = error_object("InternalError", e.what());
    out.exit_code = kExitVerification;
  } catch (const std::exception& e) {
    rep["error"] = error_object("InternalError", e.what());
    out.exit_code = kExitVerification;
  }
  return out;
}

Outcome replay(const json& stored) {
  Outcome bad;
  bad.report["tool"] = "itcalc";
  bad.report["version"] = kVersion;
  if (!stored.is_object() || !stored.contains("invocation") || !stored["invocation"].is_object()) {
    bad.exit_code = kExitInput;
    bad.report["error"] = error_object("InvalidInput", "replay file has no invocation object");
    return bad;
  }
  const json& inv = stored["invocation"];
  Options o;
  try {
    o.command = inv.at("command").get<std::string>();
    auto get = [&](const char* key, std::string& dst) {
      if (inv.contains(key)) dst = inv[key].get<std::string>();
    };
    get("algebra", o.algebra);
    get("b_algebra", o.b_algebra);
    if (inv.contains("modules")) o.modules = inv["modules"].get<std::vector<std::string>>();
    get("module", o.module);
    get("target", o.target);
    get("generator", o.generator);
    get("family", o.family);
    get("b_family", o.b_family);
    get("complex", o.complex);
    o.degree = inv.value("degree", 1);
    o.length = inv.value("length", 10);
    o.horizon = inv.at("horizon").get<int>();
    o.seed = std::to_string(inv.at("seed").get<std::uint64_t>());
  } catch (const json::exception& e) {
    bad.exit_code = kExitInput;
    bad.report["error"] = error_object("InvalidInput", std::string("malformed invocation: ") + e.what());
    return bad;
  }
  Outcome fresh = run(o);
  if (fresh.report != stored) {
    fresh.exit_code = kExitVerification;
    fresh.report["replay_mismatch"] = true;
  }
  return fresh;
}

namespace {

bool scalar_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

std::string inline_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (scalar_array(v)) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + inline_value(v[i]);
    return s + "]";
  }
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (v.is_array() && !scalar_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
    if (v.empty()) rows.emplace_back(prefix, "[]");
  } else {
    rows.emplace_back(prefix, inline_value(v));
  }
}

}  // namespace

std::string render_pretty(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return out.str();
}

}  // namespace itcalc::cli
