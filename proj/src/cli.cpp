#include "cgt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "cgt/catalog.hpp"
#include "cgt/io.hpp"
#include "cgt/modrep.hpp"
#include "cgt/oliver.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

// Frozen fingerprint of the built-in order-81 example group (value recorded
// from the canonical build; any drift in the construction trips this).
constexpr u64 kGl8Fingerprint = 0x8f08c83fcbeed347ULL;

PGroupPtr resolve_group(const std::string& target, u32 cap) {
  if (std::filesystem::exists(target)) return load_group_file(target, cap);
  if (auto e = catalog_find(target)) return e->build_group();
  throw InputError("no such file or catalog entry: " + target);
}

FpGModule resolve_module(const std::string& target, u32 cap) {
  if (std::filesystem::exists(target)) return load_module_file(target, cap);
  if (auto e = catalog_find(target)) {
    if (!e->build_module) throw InputError("catalog entry '" + target + "' has no module");
    PGroupPtr g = e->build_group();
    return e->build_module(g);
  }
  throw InputError("no such file or catalog entry: " + target);
}

ojson subgroup_json(const PGroupPtr& s, const Subgroup& h) {
  ojson j;
  j["order"] = h.order();
  ojson g = ojson::array();
  for (u32 i : h.gens) g.push_back(s->word(i));
  j["gens"] = std::move(g);
  return j;
}

long long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<u32> parse_vector(const std::string& text, u32 p, u32 dim) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != dim)
    throw InputError("vector '" + text + "' must have " + std::to_string(dim) + " entries");
  std::vector<u32> v(dim);
  for (u32 i = 0; i < dim; ++i) {
    try {
      unsigned long x = std::stoul(parts[i]);
      if (x >= p) throw InputError("vector entries must be residues in [0, p)");
      v[i] = (u32)x;
    } catch (const std::logic_error&) {
      throw InputError("bad vector entry '" + parts[i] + "'");
    }
  }
  return v;
}

// "H=<label>,<label>,... [W=<v>;<v>;...]"
ReplacementPair parse_replacement_spec(const FpGModule& m, const std::string& spec) {
  std::vector<std::string> labels;
  std::vector<std::vector<u32>> wrows;
  std::istringstream in(spec);
  std::string token;
  bool have_h = false;
  while (in >> token) {
    if (token.rfind("H=", 0) == 0) {
      labels = split(token.substr(2), ',');
      have_h = true;
    } else if (token.rfind("W=", 0) == 0) {
      for (const std::string& t : split(token.substr(2), ';'))
        if (!t.empty()) wrows.push_back(parse_vector(t, m.p, m.dim));
    } else {
      throw InputError("bad replacement token '" + token + "' (expected H=... or W=...)");
    }
  }
  if (!have_h || labels.empty()) throw InputError("replacement spec needs H=<labels>");

  std::vector<u32> gen_idx;
  for (const std::string& l : labels) {
    bool found = false;
    for (const auto& g : m.group->generators) {
      if (g.first == l) {
        gen_idx.push_back(g.second);
        found = true;
        break;
      }
    }
    if (!found) throw InputError("no generator labeled '" + l + "'");
  }
  Subgroup h = subgroup_generated(m.group, gen_idx);

  FpMatrix rows(m.p, wrows.size(), m.dim);
  for (std::size_t r = 0; r < wrows.size(); ++r)
    for (u32 c = 0; c < m.dim; ++c) rows.at(r, c) = wrows[r][c];
  return ReplacementPair{std::move(h), FpSubspace::span_rows(rows)};
}

ojson descend_json(const FpGModule& m, const ReplacementPair& start) {
  ojson j;
  j["h_order"] = start.h.order();
  j["w_dim"] = start.w.dim();
  ReplacementTrace tr = replacement_descend(m, start);
  ojson steps = ojson::array();
  for (const auto& st : tr.steps) {
    ojson row;
    row["h_order"] = st.h.order();
    row["w_dim"] = st.w.dim();
    steps.push_back(std::move(row));
  }
  j["steps"] = std::move(steps);
  const auto& fin = tr.steps.empty() ? start : tr.steps.back();
  j["final_w_dim"] = fin.w.dim();
  j["size_bound_strict"] =
      exact_log(m.p, start.h.order()) + (u32)start.w.dim() < m.dim;
  return j;
}

}  // namespace

ojson Report::to_json() const {
  ojson j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["status"] = status;
  if (seed) j["seed"] = *seed;
  j["timing_ms"] = timing_ms;
  j["results"] = results;
  return j;
}

int report_exit_code(const Report& r) { return r.status == "pass" ? 0 : 1; }

Report cmd_analyze(const std::string& target, const CliFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "analyze";
  r.inputs = {target};

  PGroupPtr s = resolve_group(target, flags.cap);
  ConjectureVerdict v = check_oliver_conjecture(s);

  ojson res;
  res["name"] = target;
  res["p"] = s->p;
  res["order"] = s->order();
  res["class"] = v.nil_class;
  res["p_rank"] = p_rank(s);
  res["fingerprint"] = group_fingerprint(s);
  res["center"] = subgroup_json(s, center(s));
  res["omega1_center"] = subgroup_json(s, omega1(s, center(s)));
  res["thompson"] = subgroup_json(s, v.thompson);
  res["oliver"] = subgroup_json(s, v.oliver);

  ojson chain = ojson::array();
  for (const auto& q : v.cert.chain) chain.push_back(subgroup_json(s, q));
  ojson wit = ojson::array();
  for (const auto& w : v.cert.witnesses) wit.push_back(w.order());
  ojson cert;
  cert["chain"] = std::move(chain);
  cert["witness_orders"] = std::move(wit);
  cert["verified"] = verify_q_series(s, v.cert, v.oliver);
  res["certificate"] = std::move(cert);

  res["quotient_class"] = v.quotient_class;
  ojson verdict;
  verdict["holds"] = v.holds;
  verdict["in_scope"] = v.in_scope;
  verdict["anomaly"] = v.anomaly;
  res["verdict"] = std::move(verdict);

  r.results = std::move(res);
  r.status = v.anomaly ? "anomaly" : "pass";
  r.timing_ms = elapsed_ms(t0);
  return r;
}

Report cmd_check_module(const std::string& target, const std::string& replacement_spec,
                        u32 random_replacements, const CliFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "check-module";
  r.inputs = {target};

  FpGModule m = resolve_module(target, flags.cap);
  const PGroupPtr& g = m.group;

  ojson res;
  res["name"] = target;
  res["p"] = m.p;
  res["dim"] = m.dim;
  res["group_order"] = g->order();

  Subgroup ker = action_kernel(m);
  const bool faithful = ker.order() == 1;
  res["faithful"] = faithful;
  res["kernel_order"] = ker.order();

  PSResult ps = satisfies_ps(m);
  ojson psj;
  psj["satisfies"] = ps.satisfies;
  ojson wits = ojson::array();
  for (const auto& [e, deg] : ps.witnesses) {
    ojson w;
    w["element"] = g->word(e);
    w["degree"] = deg;
    wits.push_back(std::move(w));
  }
  psj["witnesses"] = std::move(wits);
  res["ps"] = std::move(psj);

  std::vector<u32> quad = quadratic_elements(m);
  ojson qj;
  qj["count"] = quad.size();
  ojson qlist = ojson::array();
  for (std::size_t i = 0; i < quad.size() && i < 64; ++i) qlist.push_back(g->word(quad[i]));
  qj["elements"] = std::move(qlist);
  if (quad.size() > 64) qj["truncated"] = true;
  res["quadratic"] = std::move(qj);

  bool violated = false;
  if (faithful) {
    std::vector<OffenderReport> reps = offender_reports(m);
    u32 offenders = 0;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& rep = reps[i];
      if (rep.is_offender) ++offenders;
      if (i < 256) {
        ojson row;
        ojson gens = ojson::array();
        for (u32 gi : rep.e.gens) gens.push_back(g->word(gi));
        row["gens"] = std::move(gens);
        row["rank"] = rep.rank;
        row["fixed_dim"] = rep.fixed_dim;
        row["codim"] = rep.codim;
        row["offender"] = rep.is_offender;
        rows.push_back(std::move(row));
      }
    }
    ojson oj;
    oj["available"] = true;
    oj["total_elem_abelian"] = reps.size();
    oj["offender_count"] = offenders;
    oj["rows"] = std::move(rows);
    if (reps.size() > 256) oj["truncated"] = true;
    res["offenders"] = std::move(oj);
    res["f_module"] = offenders > 0;

    violated = (m.p % 2 == 1) && quad.empty() && offenders > 0;
    ojson check;
    check["applicable"] = (m.p % 2 == 1);
    check["violated"] = violated;
    res["offender_quadratic_check"] = std::move(check);
  } else {
    ojson oj;
    oj["available"] = false;
    oj["reason"] = "action is not faithful";
    res["offenders"] = std::move(oj);
    res["f_module"] = nullptr;
  }

  if (!replacement_spec.empty()) {
    ReplacementPair start = parse_replacement_spec(m, replacement_spec);
    res["replacement"] = descend_json(m, start);
  }

  if (random_replacements > 0) {
    const u64 seed = flags.seed.value_or(12345);
    r.seed = seed;
    std::mt19937_64 rng(seed);

    SubgroupLattice lat = elementary_abelian_subgroups(g, 1);
    std::vector<Subgroup> candidates;
    for (auto& mem : lat.members) {
      bool clean = true;
      for (u32 e : mem.sub.elems)
        if (e != 0 && std::binary_search(quad.begin(), quad.end(), e)) {
          clean = false;
          break;
        }
      if (clean) candidates.push_back(std::move(mem.sub));
    }

    ojson inst = ojson::array();
    u32 done = 0;
    for (u32 t = 0; t < random_replacements && !candidates.empty(); ++t) {
      const Subgroup& h = candidates[rng() % candidates.size()];
      FpSubspace fixed = fixed_space(m, h.gens);
      u32 k = fixed.dim() ? (u32)(rng() % (fixed.dim() + 1)) : 0;
      FpMatrix rows(m.p, k, m.dim);
      for (u32 row = 0; row < k; ++row) {
        for (std::size_t br = 0; br < fixed.basis.rows; ++br) {
          u32 coef = (u32)(rng() % m.p);
          for (u32 c = 0; c < m.dim; ++c)
            rows.at(row, c) = (rows.at(row, c) + coef * fixed.basis.at(br, c)) % m.p;
        }
      }
      ReplacementPair start{h, FpSubspace::span_rows(rows)};
      ojson one = descend_json(m, start);
      inst.push_back(std::move(one));
      ++done;
    }
    ojson rj;
    rj["seed"] = seed;
    rj["requested"] = random_replacements;
    rj["completed"] = done;
    if (candidates.empty()) rj["note"] = "no quadratic-free elementary abelian subgroups";
    rj["instances"] = std::move(inst);
    res["random_replacements"] = std::move(rj);
  }

  r.results = std::move(res);
  r.status = violated ? "anomaly" : "pass";
  r.timing_ms = elapsed_ms(t0);
  return r;
}

Report cmd_verify_example(bool tamper, const CliFlags& flags) {
  (void)flags;
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "verify-example";
  r.inputs = {"gl8"};

  ojson rows = ojson::array();
  u32 asserted_total = 0, asserted_passed = 0;
  auto add = [&](const std::string& name, bool asserted, bool pass,
                 const std::string& detail = "") {
    ojson row;
    row["name"] = name;
    row["kind"] = asserted ? "asserted" : "computed";
    row["pass"] = pass;
    if (!detail.empty()) row["detail"] = detail;
    rows.push_back(std::move(row));
    if (asserted) {
      ++asserted_total;
      if (pass) ++asserted_passed;
    }
  };

  std::array<FpMatrix, 4> parts = gl8_nilpotent_parts();
  if (tamper) parts[0].at(0, 0) = (parts[0].at(0, 0) + 1) % 3;
  const FpMatrix& al = parts[0];
  const FpMatrix& be = parts[1];
  const FpMatrix& ga = parts[2];
  const FpMatrix& de = parts[3];
  const FpMatrix id = FpMatrix::identity(3, 8);
  auto ring_comm = [](const FpMatrix& x, const FpMatrix& y) { return x * y - y * x; };

  add("alpha^3 = 0", true, (al * al * al).is_zero());
  add("beta^3 = 0", true, (be * be * be).is_zero());
  add("gamma^3 = 0", true, (ga * ga * ga).is_zero());
  add("delta^3 = 0", true, (de * de * de).is_zero());
  add("[alpha,delta] = 0", true, ring_comm(al, de).is_zero());
  add("[beta,delta] = 0", true, ring_comm(be, de).is_zero());
  add("[gamma,delta] = 0", true, ring_comm(ga, de).is_zero());
  add("[beta,gamma] = 0", true, ring_comm(be, ga).is_zero());
  add("[alpha,beta] = gamma(1+beta)(1+alpha)", true,
      ring_comm(al, be) == ga * (id + be) * (id + al));
  add("[alpha,gamma] = delta(1+gamma)(1+alpha)", true,
      ring_comm(al, ga) == de * (id + ga) * (id + al));
  add("delta^2 != 0", true, !(de * de).is_zero());
  add("beta^2 = 0", true, (be * be).is_zero());

  Gl8Example ex = gl8_example();
  const PGroup& g = *ex.group;
  add("group closes at order 81", true, g.order() == 81);
  add("nilpotency class 3", true, nilpotency_class(ex.group) == 3);
  Subgroup z = center(ex.group);
  add("center is <D> of order 3", true, z.order() == 3 && z.contains(ex.d));
  add("p-rank 3", true, p_rank(ex.group) == 3);
  add("[A,B] = C", true, g.comm(ex.a, ex.b) == ex.c);
  add("[A,C] = D", true, g.comm(ex.a, ex.c) == ex.d);
  add("[B,C] = 1", true, g.comm(ex.b, ex.c) == 0);
  add("A, B, C, D all have order 3", true,
      g.element_order(ex.a) == 3 && g.element_order(ex.b) == 3 && g.element_order(ex.c) == 3 &&
          g.element_order(ex.d) == 3);
  const u64 fp = group_fingerprint(ex.group);
  {
    std::ostringstream hex;
    hex << "0x" << std::hex << fp;
    add("group fingerprint matches frozen value", true, fp == kGl8Fingerprint, hex.str());
  }

  bool module_ok = false;
  std::string module_err;
  FpGModule mod;
  try {
    mod = build_module(ex.group, 8, {id + al, id + be, id + ga, id + de});
    module_ok = true;
  } catch (const InputError& e) {
    module_err = e.what();
  }
  add("matrices define a valid action of the group", true, module_ok, module_err);

  if (module_ok) {
    add("action is faithful", true, is_faithful(mod));
    add("power-structure condition holds", true, satisfies_ps(mod).satisfies);
    std::vector<u32> quad = quadratic_elements(mod);
    add("B acts quadratically", true,
        std::binary_search(quad.begin(), quad.end(), ex.b));
    Subgroup oz = omega1(ex.group, center(ex.group));
    bool center_quad_free = true;
    for (u32 e : oz.elems)
      if (e != 0 && std::binary_search(quad.begin(), quad.end(), e)) center_quad_free = false;
    add("omega1(center) has no quadratic element", true, center_quad_free);

    auto offender_row = [&](std::vector<u32> gens, u32 want_rank, u32 want_codim,
                            const std::string& label) {
      Subgroup e = subgroup_generated(ex.group, std::move(gens));
      u32 fd = (u32)fixed_space(mod, e.gens).dim();
      u32 codim = 8 - fd;
      bool offender = codim <= want_rank;
      std::ostringstream detail;
      detail << "rank " << want_rank << ", fixed dim " << fd << ", codim " << codim;
      add(label, false, codim == want_codim && !offender, detail.str());
    };
    offender_row({ex.b}, 1, 4, "<B> is not an offender");
    offender_row({ex.c, ex.d}, 2, 5, "<C,D> is not an offender");
    offender_row({ex.b, ex.c, ex.d}, 3, 6, "<B,C,D> is not an offender");
    add("rank(beta) = 4", false, rank(be) == 4);
    add("nilpotency degree of delta is 3", false, nilpotency_degree(de) == 3);
    {
      Subgroup base = subgroup_generated(ex.group, {ex.b, ex.c, ex.d});
      add("fixed space of <B,C,D> has dim 2", false,
          fixed_space(mod, base.gens).dim() == 2);
    }
  } else {
    add("action is faithful", true, false, "action not available");
    add("power-structure condition holds", true, false, "action not available");
    add("B acts quadratically", true, false, "action not available");
    add("omega1(center) has no quadratic element", true, false, "action not available");
  }

  ojson res;
  res["tampered"] = tamper;
  res["rows"] = std::move(rows);
  res["asserted_total"] = asserted_total;
  res["asserted_passed"] = asserted_passed;
  r.results = std::move(res);
  r.status = (asserted_passed == asserted_total) ? "pass" : "fail";
  r.timing_ms = elapsed_ms(t0);
  return r;
}

namespace {

ojson sweep_row(const CatalogEntry& e) {
  ojson row;
  row["name"] = e.name;
  row["p"] = e.p;
  try {
    PGroupPtr s = e.build_group();
    CGT_CHECK(s->order() == e.expected_order, "catalog entry order drifted");
    ConjectureVerdict v = check_oliver_conjecture(s);
    CGT_CHECK(v.nil_class == e.expected_class, "catalog entry class drifted");
    row["order"] = v.order;
    row["class"] = v.nil_class;
    row["thompson_order"] = v.thompson.order();
    row["oliver_order"] = v.oliver.order();
    ojson chain = ojson::array();
    for (const auto& q : v.cert.chain) chain.push_back(q.order());
    row["chain_orders"] = std::move(chain);
    row["quotient_class"] = v.quotient_class;
    row["holds"] = v.holds;
    row["in_scope"] = v.in_scope;
    bool anomaly = v.anomaly;

    if (e.build_module) {
      FpGModule m = e.build_module(s);
      ojson mj;
      mj["dim"] = m.dim;
      const bool faithful = is_faithful(m);
      mj["faithful"] = faithful;
      mj["ps"] = satisfies_ps(m).satisfies;
      std::vector<u32> quad = quadratic_elements(m);
      mj["quadratic_count"] = quad.size();
      if (faithful) {
        const bool fmod = is_f_module(m);
        mj["f_module"] = fmod;
        const bool violated = (m.p % 2 == 1) && quad.empty() && fmod;
        mj["offender_quadratic_violated"] = violated;
        if (violated) anomaly = true;
      }
      row["module"] = std::move(mj);
    }
    row["status"] = anomaly ? "anomaly" : (v.in_scope ? "ok" : "out-of-scope");
  } catch (const InvariantViolation& ex) {
    row["status"] = "anomaly";
    row["message"] = ex.what();
  } catch (const CapExceeded& ex) {
    row["status"] = "error";
    row["message"] = ex.what();
  } catch (const InputError& ex) {
    row["status"] = "error";
    row["message"] = ex.what();
  }
  return row;
}

}  // namespace

Report cmd_sweep(std::optional<u32> p_filter, std::optional<u64> max_order,
                 const CliFlags& flags) {
  (void)flags;
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "sweep";
  if (p_filter) r.inputs.push_back("p=" + std::to_string(*p_filter));
  if (max_order) r.inputs.push_back("max-order=" + std::to_string(*max_order));

  ojson rows = ojson::array();
  u32 anomalies = 0, errors = 0;
  for (const auto& e : catalog()) {
    if (p_filter && e.p != *p_filter) continue;
    if (max_order && e.expected_order > *max_order) continue;
    ojson row = sweep_row(e);
    std::string st = row["status"].get<std::string>();
    if (st == "anomaly") ++anomalies;
    if (st == "error") ++errors;
    rows.push_back(std::move(row));
  }
  ojson res;
  res["total"] = rows.size();
  res["anomalies"] = anomalies;
  res["errors"] = errors;
  res["rows"] = std::move(rows);
  r.results = std::move(res);
  r.status = anomalies ? "anomaly" : (errors ? "fail" : "pass");
  r.timing_ms = elapsed_ms(t0);
  return r;
}

Report cmd_catalog_list(const CliFlags& flags) {
  (void)flags;
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "catalog list";
  ojson rows = ojson::array();
  for (const auto& e : catalog()) {
    ojson row;
    row["name"] = e.name;
    row["p"] = e.p;
    row["order"] = e.expected_order;
    row["class"] = e.expected_class;
    row["has_module"] = (bool)e.build_module;
    row["description"] = e.description;
    rows.push_back(std::move(row));
  }
  ojson res;
  res["entries"] = std::move(rows);
  r.results = std::move(res);
  r.status = "pass";
  r.timing_ms = elapsed_ms(t0);
  return r;
}

Report cmd_catalog_build(const std::string& name, std::optional<u32> p, std::optional<u32> n,
                         const CliFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "catalog build";
  r.inputs = {name};

  ojson res;
  res["name"] = name;
  if (auto e = catalog_find(name)) {
    PGroupPtr g = e->build_group();
    if (e->build_module) {
      FpGModule m = e->build_module(g);
      res["kind"] = "module";
      res["p"] = m.p;
      res["order"] = g->order();
      res["document"] = save_module_json(m);
    } else {
      res["kind"] = "group";
      res["p"] = g->p;
      res["order"] = g->order();
      res["document"] = save_group_json(g);
    }
  } else {
    if (!p)
      throw InputError("unknown catalog entry '" + name +
                       "'; for a family build pass --p (and --n)");
    PGroupPtr g = build_family(name, *p, n.value_or(1), flags.cap);
    res["kind"] = "group";
    res["p"] = g->p;
    res["order"] = g->order();
    res["document"] = save_group_json(g);
  }
  if (!flags.out.empty()) res["written_to"] = flags.out;
  r.results = std::move(res);
  r.status = "pass";
  r.timing_ms = elapsed_ms(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string gens_str(const ojson& sub) {
  std::string s;
  for (const auto& g : sub.at("gens")) {
    if (!s.empty()) s += ", ";
    s += g.get<std::string>();
  }
  return s.empty() ? "(none)" : s;
}

void render_analyze(std::ostringstream& os, const ojson& res) {
  os << "group " << res.at("name").get<std::string>() << ": p=" << res.at("p")
     << " order=" << res.at("order") << " class=" << res.at("class")
     << " p-rank=" << res.at("p_rank") << "\n";
  os << "  fingerprint: 0x" << std::hex << res.at("fingerprint").get<u64>() << std::dec << "\n";
  os << "  center: order " << res.at("center").at("order") << " <" << gens_str(res.at("center"))
     << ">\n";
  os << "  omega1(center): order " << res.at("omega1_center").at("order") << "\n";
  os << "  Thompson subgroup J(S): order " << res.at("thompson").at("order") << " <"
     << gens_str(res.at("thompson")) << ">\n";
  os << "  Oliver subgroup X(S): order " << res.at("oliver").at("order") << " <"
     << gens_str(res.at("oliver")) << ">\n";
  os << "  series chain orders:";
  for (const auto& q : res.at("certificate").at("chain")) os << " " << q.at("order");
  os << "  (witness orders:";
  for (const auto& w : res.at("certificate").at("witness_orders")) os << " " << w;
  os << "; verified: "
     << (res.at("certificate").at("verified").get<bool>() ? "yes" : "NO") << ")\n";
  os << "  quotient S/X class: " << res.at("quotient_class") << "\n";
  const ojson& v = res.at("verdict");
  os << "  verdict: J(S) <= X(S) " << (v.at("holds").get<bool>() ? "holds" : "FAILS")
     << (v.at("in_scope").get<bool>() ? " (p odd, in scope)" : " (p = 2, out of scope)") << "\n";
}

void render_check_module(std::ostringstream& os, const ojson& res) {
  os << "module " << res.at("name").get<std::string>() << ": p=" << res.at("p")
     << " dim=" << res.at("dim") << " over group of order " << res.at("group_order") << "\n";
  os << "  faithful: " << (res.at("faithful").get<bool>() ? "yes" : "no")
     << " (kernel order " << res.at("kernel_order") << ")\n";
  const ojson& ps = res.at("ps");
  os << "  power-structure condition: "
     << (ps.at("satisfies").get<bool>() ? "satisfied" : "NOT satisfied");
  if (!ps.at("witnesses").empty()) {
    os << "  [";
    bool first = true;
    for (const auto& w : ps.at("witnesses")) {
      if (!first) os << ", ";
      first = false;
      os << w.at("element").get<std::string>() << " -> degree " << w.at("degree");
    }
    os << "]";
  }
  os << "\n";
  os << "  quadratic elements: " << res.at("quadratic").at("count") << "\n";
  const ojson& off = res.at("offenders");
  if (off.at("available").get<bool>()) {
    os << "  offenders: " << off.at("offender_count") << " of " << off.at("total_elem_abelian")
       << " elementary abelian subgroups\n";
    for (const auto& row : off.at("rows")) {
      if (!row.at("offender").get<bool>()) continue;
      os << "    offender <" << gens_str(row) << "> rank " << row.at("rank") << " codim "
         << row.at("codim") << "\n";
    }
    os << "  F-module: " << (res.at("f_module").get<bool>() ? "yes" : "no") << "\n";
    const ojson& chk = res.at("offender_quadratic_check");
    if (chk.at("applicable").get<bool>())
      os << "  offender/quadratic cross-check: "
         << (chk.at("violated").get<bool>() ? "VIOLATED" : "consistent") << "\n";
  } else {
    os << "  offenders: unavailable (" << off.at("reason").get<std::string>() << ")\n";
  }
  if (res.contains("replacement")) {
    const ojson& rp = res.at("replacement");
    os << "  replacement descent: |H|=" << rp.at("h_order") << " dim W=" << rp.at("w_dim");
    for (const auto& st : rp.at("steps"))
      os << " -> (|H|=" << st.at("h_order") << ", dim W=" << st.at("w_dim") << ")";
    os << "; strict size bound: " << (rp.at("size_bound_strict").get<bool>() ? "yes" : "NO")
       << "\n";
  }
  if (res.contains("random_replacements")) {
    const ojson& rr = res.at("random_replacements");
    os << "  random descents: " << rr.at("completed") << "/" << rr.at("requested")
       << " completed (seed " << rr.at("seed") << ")\n";
  }
}

void render_verify(std::ostringstream& os, const ojson& res) {
  if (res.at("tampered").get<bool>()) os << "NEGATIVE CONTROL: one frozen entry corrupted\n";
  for (const auto& row : res.at("rows")) {
    std::string name = row.at("name").get<std::string>();
    std::string kind = row.at("kind").get<std::string>();
    os << "  [" << kind << "] " << name;
    for (std::size_t i = name.size(); i < 44; ++i) os << ' ';
    os << (row.at("pass").get<bool>() ? "pass" : "FAIL");
    if (row.contains("detail")) os << "  (" << row.at("detail").get<std::string>() << ")";
    os << "\n";
  }
  os << "asserted rows passed: " << res.at("asserted_passed") << "/" << res.at("asserted_total")
     << "\n";
}

void render_sweep(std::ostringstream& os, const ojson& res) {
  for (const auto& row : res.at("rows")) {
    os << "  " << row.at("name").get<std::string>();
    for (std::size_t i = row.at("name").get<std::string>().size(); i < 8; ++i) os << ' ';
    if (row.contains("order")) {
      os << " p=" << row.at("p") << " order=" << row.at("order") << " class=" << row.at("class")
         << " J=" << row.at("thompson_order") << " X=" << row.at("oliver_order")
         << " holds=" << (row.at("holds").get<bool>() ? "yes" : "no");
      if (row.contains("module"))
        os << " module(dim=" << row.at("module").at("dim")
           << " ps=" << (row.at("module").at("ps").get<bool>() ? "yes" : "no") << ")";
      os << " [" << row.at("status").get<std::string>() << "]";
    } else {
      os << " [" << row.at("status").get<std::string>() << "] "
         << row.value("message", std::string());
    }
    os << "\n";
  }
  os << "entries: " << res.at("total") << ", anomalies: " << res.at("anomalies")
     << ", errors: " << res.at("errors") << "\n";
}

void render_catalog_list(std::ostringstream& os, const ojson& res) {
  for (const auto& row : res.at("entries")) {
    std::string name = row.at("name").get<std::string>();
    os << "  " << name;
    for (std::size_t i = name.size(); i < 8; ++i) os << ' ';
    os << " p=" << row.at("p") << " order=" << row.at("order") << " class=" << row.at("class")
       << (row.at("has_module").get<bool>() ? " [module] " : "          ")
       << row.at("description").get<std::string>() << "\n";
  }
}

void render_catalog_build(std::ostringstream& os, const ojson& res) {
  os << "built " << res.at("kind").get<std::string>() << " '" << res.at("name").get<std::string>()
     << "' (p=" << res.at("p") << ", order " << res.at("order") << ")\n";
  if (res.contains("written_to"))
    os << "document written to " << res.at("written_to").get<std::string>() << "\n";
  else
    os << res.at("document").dump(2) << "\n";
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream os;
  if (r.command == "analyze")
    render_analyze(os, r.results);
  else if (r.command == "check-module")
    render_check_module(os, r.results);
  else if (r.command == "verify-example")
    render_verify(os, r.results);
  else if (r.command == "sweep")
    render_sweep(os, r.results);
  else if (r.command == "catalog list")
    render_catalog_list(os, r.results);
  else if (r.command == "catalog build")
    render_catalog_build(os, r.results);
  else
    os << r.results.dump(2) << "\n";
  os << "status: " << r.status << " (" << r.timing_ms << " ms)\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Argument wiring

namespace {

int emit(const Report& r, const CliFlags& flags) {
  std::string doc = r.to_json().dump(2) + "\n";
  if (flags.json)
    std::fputs(doc.c_str(), stdout);
  else
    std::fputs(render_human(r).c_str(), stdout);
  if (!flags.out.empty()) {
    if (r.command == "catalog build")
      write_text_file(flags.out, r.results.at("document").dump(2) + "\n");
    else
      write_text_file(flags.out, doc);
  }
  return report_exit_code(r);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finite p-group toolkit: Thompson and Oliver subgroups, module diagnostics"};
  app.require_subcommand(1);

  CliFlags flags;
  u64 seed_val = 0;
  app.add_flag("--json", flags.json, "emit the machine-readable report on stdout");
  app.add_option("--cap", flags.cap, "group order cap")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed_val, "seed for randomized modes");
  app.add_option("-o,--out", flags.out, "write the JSON document to a file");

  auto* analyze = app.add_subcommand("analyze", "analyze a group file or catalog entry");
  analyze->fallthrough();
  std::string analyze_target;
  analyze->add_option("target", analyze_target, "group JSON file or catalog name")->required();

  auto* checkm = app.add_subcommand("check-module", "check a module file or catalog entry");
  checkm->fallthrough();
  std::string module_target, replacement_spec;
  u32 random_replacements = 0;
  checkm->add_option("target", module_target, "module JSON file or catalog name")->required();
  checkm->add_option("--replacement", replacement_spec,
                     "\"H=<labels> [W=<vec;vec>]\" descent trace");
  checkm->add_option("--random-replacements", random_replacements,
                     "run N seeded random descent instances");

  auto* verify = app.add_subcommand("verify-example",
                                    "re-derive the frozen order-81 example end to end");
  verify->fallthrough();
  bool tamper = false;
  verify->add_flag("--tamper", tamper, "negative control: corrupt one frozen entry");

  auto* sweep = app.add_subcommand("sweep", "run the analysis across the catalog");
  sweep->fallthrough();
  u32 sweep_p = 0;
  u64 sweep_max = 0;
  auto* sweep_p_opt = sweep->add_option("--p", sweep_p, "only entries with this p");
  auto* sweep_max_opt = sweep->add_option("--max-order", sweep_max, "only entries up to this order");

  auto* cat = app.add_subcommand("catalog", "list or build built-in groups and modules");
  cat->fallthrough();
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog entries");
  cat_list->fallthrough();
  auto* cat_build = cat->add_subcommand("build", "emit a catalog entry or family as JSON");
  cat_build->fallthrough();
  std::string build_name;
  u32 build_p = 0, build_n = 0;
  cat_build->add_option("name", build_name, "catalog entry or family name")->required();
  auto* build_p_opt = cat_build->add_option("--p", build_p, "prime for family builds");
  auto* build_n_opt = cat_build->add_option("--n", build_n, "size parameter for family builds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (seed_opt->count()) flags.seed = seed_val;

  try {
    Report r;
    if (app.got_subcommand(analyze)) {
      r = cmd_analyze(analyze_target, flags);
    } else if (app.got_subcommand(checkm)) {
      r = cmd_check_module(module_target, replacement_spec, random_replacements, flags);
    } else if (app.got_subcommand(verify)) {
      r = cmd_verify_example(tamper, flags);
    } else if (app.got_subcommand(sweep)) {
      std::optional<u32> pf;
      std::optional<u64> mo;
      if (sweep_p_opt->count()) pf = sweep_p;
      if (sweep_max_opt->count()) mo = sweep_max;
      r = cmd_sweep(pf, mo, flags);
    } else if (cat->got_subcommand(cat_list)) {
      r = cmd_catalog_list(flags);
    } else if (cat->got_subcommand(cat_build)) {
      std::optional<u32> p, n;
      if (build_p_opt->count()) p = build_p;
      if (build_n_opt->count()) n = build_n;
      r = cmd_catalog_build(build_name, p, n, flags);
    } else {
      throw InputError("no subcommand given");
    }
    return emit(r, flags);
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const CapExceeded& e) {
    std::fprintf(stderr, "cap exceeded: %s\n", e.what());
    return 3;
  } catch (const InvariantViolation& e) {
    std::fprintf(stderr, "anomaly: invariant violated: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace cgt
