// zetaforge: exact L-factor, coset, and identity calculator on the
// unramified parameter rings. Every output is computed in exact rational
// arithmetic; "verified" always means identically zero difference.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaforge/acceptance.hpp"
#include "zetaforge/context.hpp"
#include "zetaforge/identity.hpp"
#include "zetaforge/lfactors.hpp"
#include "zetaforge/orbits.hpp"
#include "zetaforge/satake.hpp"

using json = nlohmann::ordered_json;
using namespace zetaforge;

namespace {

constexpr const char* kDefaultPresetFile = "zetaforge.presets";

struct CtxOpts {
  std::string kind;
  int m = -1;
  int mtilde = -1;
  int ell = -1;
  int j = -1;
  std::string preset;
};

void add_ctx_flags(CLI::App* cmd, CtxOpts& o) {
  cmd->add_option("--kind", o.kind,
                  "unitary-inert|unitary-split|so-odd|so-even-split|"
                  "so-even-quasisplit");
  cmd->add_option("--m", o.m, "space dimension");
  cmd->add_option("--mtilde", o.mtilde, "Witt index (derives m)");
  cmd->add_option("--ell", o.ell, "inner induction index (default 0)");
  cmd->add_option("--j", o.j, "outer induction index (default 1)");
  cmd->add_option("--preset", o.preset, "named context from the preset file");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    const int out = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ZfError(ErrorCode::ParseError,
                  "preset line " + std::to_string(line) +
                      ": not an integer: " + v);
  }
}

// name = kind=... m=5 ell=1 j=2   (# starts a comment line)
CtxOpts load_preset(const std::string& name) {
  const char* env = std::getenv("ZETAFORGE_PRESETS");
  const std::string path = env != nullptr ? env : kDefaultPresetFile;
  std::ifstream in(path);
  if (!in)
    throw ZfError(ErrorCode::ParseError,
                  "cannot open preset file: " + path);
  std::map<std::string, CtxOpts> presets;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ZfError(ErrorCode::ParseError,
                    "preset line " + std::to_string(lineno) +
                        ": expected 'name = key=value ...'");
    const std::string pname = trim(line.substr(0, eq));
    if (pname.empty())
      throw ZfError(ErrorCode::ParseError,
                    "preset line " + std::to_string(lineno) + ": empty name");
    if (presets.count(pname))
      throw ZfError(ErrorCode::ParseError,
                    "preset line " + std::to_string(lineno) +
                        ": duplicate preset " + pname);
    CtxOpts o;
    std::istringstream rest(line.substr(eq + 1));
    std::string tok;
    while (rest >> tok) {
      const auto keq = tok.find('=');
      if (keq == std::string::npos)
        throw ZfError(ErrorCode::ParseError,
                      "preset line " + std::to_string(lineno) +
                          ": expected key=value, got " + tok);
      const std::string key = tok.substr(0, keq);
      const std::string val = tok.substr(keq + 1);
      if (key == "kind")
        o.kind = val;
      else if (key == "m")
        o.m = parse_int(val, lineno);
      else if (key == "mtilde")
        o.mtilde = parse_int(val, lineno);
      else if (key == "ell")
        o.ell = parse_int(val, lineno);
      else if (key == "j")
        o.j = parse_int(val, lineno);
      else
        throw ZfError(ErrorCode::ParseError,
                      "preset line " + std::to_string(lineno) +
                          ": unknown key " + key);
    }
    presets.emplace(pname, o);
  }
  const auto it = presets.find(name);
  if (it == presets.end())
    throw ZfError(ErrorCode::ParseError,
                  "preset " + name + " not found in " + path);
  return it->second;
}

GroupContext resolve_ctx(const CtxOpts& given) {
  CtxOpts o = given;
  if (!o.preset.empty()) {
    const CtxOpts base = load_preset(o.preset);
    if (o.kind.empty()) o.kind = base.kind;
    if (o.m < 0) o.m = base.m;
    if (o.mtilde < 0) o.mtilde = base.mtilde;
    if (o.ell < 0) o.ell = base.ell;
    if (o.j < 0) o.j = base.j;
  }
  if (o.ell < 0) o.ell = 0;
  if (o.j < 0) o.j = 1;
  if (o.kind.empty())
    throw ZfError(ErrorCode::InvalidContext, "--kind is required");
  const GroupKind kind = parse_kind(o.kind);
  if (o.m >= 0) return GroupContext::make(kind, o.m, o.ell, o.j);
  if (o.mtilde >= 0)
    return GroupContext::make_from_mtilde(kind, o.mtilde, o.ell, o.j);
  throw ZfError(ErrorCode::InvalidContext, "--m or --mtilde is required");
}

json ctx_json(const GroupContext& c) {
  return json{{"kind", kind_name(c.kind)}, {"m", c.m},
              {"n", c.n},                  {"mtilde", c.mtilde},
              {"ell", c.ell},              {"j", c.j},
              {"dimV0", c.dimV0},          {"mtildeH", c.mtildeH}};
}

json report_json(const IdentityReport& r) {
  json out{{"status", identity_status_name(r.status)}};
  if (!r.witness.is_zero()) out["witness"] = r.witness.to_string();
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

struct Outcome {
  json context;
  json result;
  int exit_code = 0;
};

int report_exit(const IdentityReport& r) { return r.hard_failure() ? 1 : 0; }

void print_text(const json& result, std::ostream& os) {
  if (result.contains("polynomial")) {
    os << result["polynomial"].get<std::string>() << "\n";
  } else if (result.contains("count")) {
    os << result["count"].get<int>() << "\n";
  } else if (result.contains("entries")) {
    for (const auto& e : result["entries"]) os << e.dump() << "\n";
  } else if (result.contains("survivor")) {
    os << result["survivor"].dump() << "\n";
  } else if (result.contains("status")) {
    os << result["status"].get<std::string>();
    if (result.contains("detail"))
      os << " (" << result["detail"].get<std::string>() << ")";
    os << "\n";
    if (result.contains("witness"))
      os << "witness: " << result["witness"].get<std::string>() << "\n";
  } else {
    os << result.dump(2) << "\n";
  }
}

std::vector<SatakeDatum> unit_blocks(const GroupContext& ctx, int r) {
  if (r < 1 || ctx.j != r)
    throw ZfError(ErrorCode::InvalidContext,
                  "--r blocks of size one need j == r");
  std::vector<SatakeDatum> blocks;
  for (int k = 0; k < r; ++k)
    blocks.push_back(SatakeDatum::tau_block(ctx, k, 1));
  return blocks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unramified L-factor and coset calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  std::function<Outcome()> action;
  std::string command;

  auto set_action = [&](CLI::App* cmd, const std::string& name,
                        std::function<Outcome()> fn) {
    cmd->callback([&action, &command, name, fn]() {
      command = name;
      action = fn;
    });
  };

  // ---- lfactor -------------------------------------------------------
  auto* lf = app.add_subcommand("lfactor", "closed-form factor constructors");
  lf->require_subcommand(1);

  static CtxOpts lf_ctx;
  std::string lf_with = "pi";
  std::string lf_range = "block";
  std::string lf_twist = "none";
  std::string lf_svar = "present";
  std::string lf_slice = "full";
  std::string lf_shift = "2s+1";
  int lf_t = 0;
  int lf_i = 1;
  int lf_r = 2;

  auto range_mode = [&]() {
    return lf_range == "full" ? RangeMode::FullN : RangeMode::TauBlock;
  };

  {
    auto* c = lf->add_subcommand("tensor", "pairing factor of tau");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--with", lf_with, "pi|sigma")->check(CLI::IsMember({"pi", "sigma"}));
    c->add_option("--range-mode", lf_range, "block|full")
        ->check(CLI::IsMember({"block", "full"}));
    set_action(c, "lfactor tensor", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto tau = SatakeDatum::tau_of(ctx);
      const auto other = lf_with == "sigma" ? SatakeDatum::sigma_of(ctx)
                                            : SatakeDatum::pi_of(ctx);
      const auto f = tensor_L(tau, other, ctx, range_mode());
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("asai", "twisted self-pairing factor");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--twist", lf_twist, "none|xi-m")
        ->check(CLI::IsMember({"none", "xi-m"}));
    set_action(c, "lfactor asai", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f = asai_L(SatakeDatum::tau_of(ctx), ctx,
                            lf_twist == "xi-m" ? AsaiTwist::XiPowM
                                               : AsaiTwist::None);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("rankin", "pairing of two tau blocks");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--shift", lf_shift, "s|2s+1")
        ->check(CLI::IsMember({"s", "2s+1"}));
    set_action(c, "lfactor rankin", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto a = SatakeDatum::tau_block(ctx, 0, ctx.j);
      const auto b = SatakeDatum::tau_block(ctx, ctx.j, ctx.j);
      const auto f = gl_rankin_L(
          a, b, lf_shift == "s" ? GlShift::S : GlShift::TwoSPlusOne);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("exterior-square", "alternating square factor");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor exterior-square", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f = so_square_L(SatakeDatum::tau_of(ctx), SquareKind::Exterior);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("symmetric-square", "symmetric square factor");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor symmetric-square", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f =
          so_square_L(SatakeDatum::tau_of(ctx), SquareKind::Symmetric);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("zeta", "slice zeta polynomial");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--t", lf_t, "shift exponent");
    c->add_option("--slice", lf_slice, "full|sigma")
        ->check(CLI::IsMember({"full", "sigma"}));
    set_action(c, "lfactor zeta", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto slice =
          lf_slice == "sigma" ? sigma_slice(ctx) : full_slice(ctx);
      const auto z = zeta_poly(slice, lf_t, ctx);
      return {ctx_json(ctx), json{{"polynomial", z.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("d", "boundary linear factors");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--svar", lf_svar, "present|absent")
        ->check(CLI::IsMember({"present", "absent"}));
    set_action(c, "lfactor d", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f = d_factor(SatakeDatum::tau_of(ctx), ctx,
                              lf_svar == "absent" ? SVar::Absent
                                                  : SVar::Present);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("q", "support-ideal pairing polynomial");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor q", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto q = Q_poly(SatakeDatum::tau_of(ctx),
                            SatakeDatum::pi_of(ctx), ctx);
      return {ctx_json(ctx), json{{"polynomial", q.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("phi0", "support-ideal generator");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor phi0", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f = phi0_element(SatakeDatum::tau_of(ctx), ctx);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("cfunction", "zeta(1)/zeta(0) ratio");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor cfunction", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      return {ctx_json(ctx),
              json{{"polynomial", c_function(ctx).to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("pstar", "normalized numerator polynomial");
    add_ctx_flags(c, lf_ctx);
    set_action(c, "lfactor pstar", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      return {ctx_json(ctx), json{{"polynomial", P_star(ctx).to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("gamma", "GL-range reflection ratio");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--i", lf_i, "simple reflection index")->required();
    set_action(c, "lfactor gamma", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      return {ctx_json(ctx),
              json{{"polynomial", gamma_gl(ctx, lf_i).to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("unramified", "closed-form main value");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--range-mode", lf_range, "block|full")
        ->check(CLI::IsMember({"block", "full"}));
    set_action(c, "lfactor unramified", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f =
          unramified_rhs(SatakeDatum::tau_of(ctx), SatakeDatum::sigma_of(ctx),
                         SatakeDatum::pi_of(ctx), ctx, range_mode());
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }
  {
    auto* c = lf->add_subcommand("eulerian", "blockwise main value");
    add_ctx_flags(c, lf_ctx);
    c->add_option("--r", lf_r, "number of size-one blocks (j must equal r)");
    set_action(c, "lfactor eulerian", [&]() -> Outcome {
      const auto ctx = resolve_ctx(lf_ctx);
      const auto f = eulerian_rhs(unit_blocks(ctx, lf_r),
                                  SatakeDatum::sigma_of(ctx),
                                  SatakeDatum::pi_of(ctx), ctx);
      return {ctx_json(ctx), json{{"polynomial", f.to_string()}}, 0};
    });
  }

  // ---- orbits --------------------------------------------------------
  auto* ob = app.add_subcommand("orbits", "double-coset and orbit data");
  ob->require_subcommand(1);

  static CtxOpts ob_ctx;
  OrbitCountQuery oc;
  std::string oc_space = "unitary";

  {
    auto* c = ob->add_subcommand("eps", "admissible coset indices");
    add_ctx_flags(c, ob_ctx);
    set_action(c, "orbits eps", [&]() -> Outcome {
      const auto ctx = resolve_ctx(ob_ctx);
      json entries = json::array();
      for (const auto& d : enumerate_eps(ctx))
        entries.push_back(json{{"alpha", d.alpha},
                               {"beta", d.beta},
                               {"twisted", d.twisted}});
      return {ctx_json(ctx), json{{"entries", entries}}, 0};
    });
  }
  {
    auto* c = ob->add_subcommand("survivor", "the open surviving summand");
    add_ctx_flags(c, ob_ctx);
    set_action(c, "orbits survivor", [&]() -> Outcome {
      const auto ctx = resolve_ctx(ob_ctx);
      const auto s = surviving_summand(ctx);
      return {ctx_json(ctx),
              json{{"survivor", json{{"alpha", s.coset.alpha},
                                     {"beta", s.coset.beta},
                                     {"twisted", s.coset.twisted},
                                     {"eps_shape", s.eps_shape},
                                     {"gamma_shape", s.gamma_shape}}}},
              0};
    });
  }
  {
    auto* c = ob->add_subcommand("count", "stabilizer orbit count");
    c->add_option("--dimx", oc.dimX)->required();
    c->add_option("--wittw", oc.wittW)->required();
    c->add_option("--wittw0perp", oc.wittW0perp)->required();
    c->add_option("--dimw", oc.dimW)->required();
    c->add_option("--space", oc_space, "unitary|orthogonal")
        ->check(CLI::IsMember({"unitary", "orthogonal"}));
    set_action(c, "orbits count", [&]() -> Outcome {
      oc.space = oc_space == "orthogonal" ? OrbitCountQuery::Space::Orthogonal
                                          : OrbitCountQuery::Space::Unitary;
      json q{{"dimX", oc.dimX},
             {"wittW", oc.wittW},
             {"wittW0perp", oc.wittW0perp},
             {"dimW", oc.dimW},
             {"space", oc_space}};
      return {q, json{{"count", bessel_orbit_count(oc)}}, 0};
    });
  }
  {
    auto* c = ob->add_subcommand("boundary", "boundary-stratum summands");
    add_ctx_flags(c, ob_ctx);
    set_action(c, "orbits boundary", [&]() -> Outcome {
      const auto ctx = resolve_ctx(ob_ctx);
      json entries = json::array();
      for (const auto& b : beta_boundary_cases(ctx)) {
        json killed = json::array();
        for (const auto& k : b.killed_by) killed.push_back(k);
        entries.push_back(json{{"label", b.label},
                               {"orbit_count", b.orbit_count},
                               {"killed_by", killed}});
      }
      return {ctx_json(ctx), json{{"entries", entries}}, 0};
    });
  }

  // ---- jacquet -------------------------------------------------------
  auto* jq = app.add_subcommand("jacquet", "coinvariant constituent tables");
  jq->require_subcommand(1);

  static CtxOpts jq_ctx;
  int jq_l1 = 0, jq_l2 = 0, jq_l3 = 0, jq_j = 0;

  auto constituents_json = [](const std::vector<JacquetConstituent>& list) {
    json entries = json::array();
    for (const auto& c : list) {
      json e{{"family", c.family}};
      if (c.index >= 0) e["index"] = c.index;
      if (c.t >= 0) e["t"] = c.t;
      e["exp_shift"] = render_half(c.exp_shift_doubled);
      e["description"] = c.description;
      entries.push_back(e);
    }
    return json{{"entries", entries}};
  };

  {
    auto* c = jq->add_subcommand("inert", "single-datum constituent list");
    add_ctx_flags(c, jq_ctx);
    set_action(c, "jacquet inert", [&]() -> Outcome {
      const auto ctx = resolve_ctx(jq_ctx);
      return {ctx_json(ctx), constituents_json(jacquet_constituents_inert(ctx)),
              0};
    });
  }
  {
    auto* c = jq->add_subcommand("split", "paired-datum constituent list");
    c->add_option("--l1", jq_l1)->required();
    c->add_option("--l2", jq_l2)->required();
    c->add_option("--l3", jq_l3)->required();
    c->add_option("--j", jq_j)->required();
    set_action(c, "jacquet split", [&]() -> Outcome {
      json q{{"l1", jq_l1}, {"l2", jq_l2}, {"l3", jq_l3}, {"j", jq_j}};
      return {q,
              constituents_json(
                  jacquet_constituents_split(jq_l1, jq_l2, jq_l3, jq_j)),
              0};
    });
  }

  // ---- verify --------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "machine checks of the identities");
  vf->require_subcommand(1);

  static CtxOpts vf_ctx;
  std::vector<int> vf_n;
  int vf_i = -1;
  int vf_r = 2;
  std::string vf_range = "block";

  {
    auto* c = vf->add_subcommand("delta-antisym", "Weyl antisymmetry of delta");
    add_ctx_flags(c, vf_ctx);
    set_action(c, "verify delta-antisym", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      const auto r = check_delta_antisymmetry(ctx);
      return {ctx_json(ctx), report_json(r), report_exit(r)};
    });
  }
  {
    auto* c = vf->add_subcommand("vanishing", "alternating character sum");
    add_ctx_flags(c, vf_ctx);
    c->add_option("--n", vf_n, "character exponents n_1..n_ell");
    set_action(c, "verify vanishing", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      const auto r = check_vanishing(ctx, vf_n);
      return {ctx_json(ctx), report_json(r), report_exit(r)};
    });
  }
  {
    auto* c = vf->add_subcommand("main-delta", "collapsed-product identity");
    add_ctx_flags(c, vf_ctx);
    set_action(c, "verify main-delta", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      const auto r = check_main_delta_identity(ctx);
      return {ctx_json(ctx), report_json(r), report_exit(r)};
    });
  }
  {
    auto* c = vf->add_subcommand("q-identity", "pairing polynomial identity");
    add_ctx_flags(c, vf_ctx);
    c->add_option("--range-mode", vf_range, "block|full")
        ->check(CLI::IsMember({"block", "full"}));
    set_action(c, "verify q-identity", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      const bool ok = verify_Q_identity(
          ctx, vf_range == "full" ? RangeMode::FullN : RangeMode::TauBlock);
      json result{{"status", ok ? "verified" : "failed"}};
      return {ctx_json(ctx), result, ok ? 0 : 1};
    });
  }
  {
    auto* c = vf->add_subcommand("cstar", "reflection ratio of pstar");
    add_ctx_flags(c, vf_ctx);
    c->add_option("--i", vf_i, "reflection index (default: all)");
    set_action(c, "verify cstar", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      if (vf_i >= 0) {
        const auto r = check_cstar_ratio(ctx, vf_i);
        return {ctx_json(ctx), report_json(r), report_exit(r)};
      }
      const int imax = ctx.split_type() ? ctx.m - 1 : ctx.mtilde;
      json entries = json::array();
      bool all_ok = true;
      for (int i = 1; i <= imax; ++i) {
        const auto r = check_cstar_ratio(ctx, i);
        json e = report_json(r);
        e["i"] = i;
        entries.push_back(e);
        all_ok = all_ok && !r.hard_failure();
      }
      json result{{"status", all_ok ? "verified" : "failed"},
                  {"entries", entries}};
      return {ctx_json(ctx), result, all_ok ? 0 : 1};
    });
  }
  {
    auto* c = vf->add_subcommand("eulerian", "blockwise factorization");
    add_ctx_flags(c, vf_ctx);
    c->add_option("--r", vf_r, "number of size-one blocks (j must equal r)");
    set_action(c, "verify eulerian", [&]() -> Outcome {
      const auto ctx = resolve_ctx(vf_ctx);
      const auto r = check_eulerian_factorization(ctx, vf_r);
      return {ctx_json(ctx), report_json(r), report_exit(r)};
    });
  }

  // ---- suite ---------------------------------------------------------
  {
    auto* c = app.add_subcommand("suite", "full acceptance battery");
    set_action(c, "suite", [&]() -> Outcome {
      const auto s = run_acceptance();
      print_acceptance(s, std::cerr);
      json entries = json::array();
      for (const auto& cr : s.criteria)
        entries.push_back(json{{"id", cr.id},
                               {"name", cr.name},
                               {"pass", cr.pass},
                               {"elapsed_ms", cr.elapsed_ms},
                               {"detail", cr.detail}});
      json result{{"all_pass", s.all_pass},
                  {"total_ms", s.total_ms},
                  {"criteria", entries}};
      return {json::object(), result, s.all_pass ? 0 : 1};
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"command", "parse"},
             {"error", json{{"code", "UsageError"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome out = action();
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (format == "text") {
      print_text(out.result, std::cout);
    } else {
      json doc{{"command", command},
               {"context", out.context},
               {"result", out.result},
               {"elapsed_ms", elapsed}};
      std::cout << doc.dump(2) << std::endl;
    }
    return out.exit_code;
  } catch (const ZfError& e) {
    json err{{"command", command},
             {"error", json{{"code", e.code_name()},
                            {"message", e.message()}}}};
    std::cout << err.dump(2) << std::endl;
    return 2;
  }
}
