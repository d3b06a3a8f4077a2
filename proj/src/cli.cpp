#include "biquad/cli.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "biquad/biquad_analysis.hpp"
#include "biquad/closure_descent.hpp"
#include "biquad/elem_abelian.hpp"
#include "biquad/error.hpp"
#include "biquad/json_io.hpp"
#include "biquad/moduli.hpp"
#include "biquad/normal_forms.hpp"
#include "biquad/oracle.hpp"

namespace biquad {

namespace {

json parse_payload(const std::string& arg) {
  std::string text = arg;
  std::string path;
  if (!arg.empty() && arg[0] == '@')
    path = arg.substr(1);
  else if (arg.find('{') == std::string::npos)
    path = arg;  // no inline JSON object, treat as a file name
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in)
      throw Error(ErrorCode::MalformedInput, "cannot read payload file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

json handle_analyze(const Field& F, const json& payload) {
  BiquadPoly P = biquad_from_json(F, payload);
  json out;
  if (!is_irreducible_biquadratic(P)) {
    out["irreducible"] = false;
    return out;
  }
  AutResult aut = aut_type(P);
  out["irreducible"] = true;
  out["aut"] = to_string(aut.kind);
  out["galois"] = is_galois(P);
  json subs = json::array();
  for (const SquareClass& c : quadratic_subfields(P))
    subs.push_back(elem_to_json(F, c.rep));
  out["subfields"] = subs;
  if (aut.galois_closure_group) out["closure_group"] = *aut.galois_closure_group;
  return out;
}

json handle_iso(const Field& F, const json& pj, const json& qj) {
  BiquadPoly P = biquad_from_json(F, pj);
  BiquadPoly Q = biquad_from_json(F, qj);
  NoncyclicVerdict v = noncyclic_iso(P, Q);
  json out;
  out["isomorphic"] = v.isomorphic;
  if (v.witness) {
    json w;
    w["c"] = elem_to_json(F, v.witness->c);
    w["a"] = elem_to_json(F, v.witness->a);
    w["r"] = v.witness->r;
    w["s"] = v.witness->s;
    w["omega"] = elem_to_json(F, v.witness->omega);
    w["branch"] = to_string(v.witness->branch);
    out["witness"] = w;
  } else if (v.mode == "elementary_abelian" && v.isomorphic) {
    out["condition"] = v.elem_condition;
  }
  return out;
}

json handle_closure(const Field& F, const json& pj) {
  BiquadPoly P = biquad_from_json(F, pj);
  ClosureReport rep = elem_abelian_closure(P);
  json out;
  out["kind"] = to_string(rep.kind);
  if (rep.w_class) out["w_class"] = elem_to_json(F, rep.w_class->rep);
  if (rep.closure_field) out["closure_field"] = field_to_json(*rep.closure_field);
  return out;
}

json handle_radical(const Field& F, const json& pj) {
  ElemAbelianExt E = make_elem_abelian(F, elem_from_json(F, pj.at("a")),
                                       elem_from_json(F, pj.at("b")));
  RadicalReport rep = radical_closure_analysis(E);
  json out;
  out["kind"] = to_string(rep.kind);
  if (rep.radical_min_poly) out["radical_min_poly"] = biquad_to_json(*rep.radical_min_poly);
  if (rep.generator_square) out["generator_square"] = elem_to_json(F, *rep.generator_square);
  if (!rep.generator.empty()) out["generator"] = rep.generator;
  if (!rep.closure_classes.empty()) {
    json cs = json::array();
    for (const SquareClass& c : rep.closure_classes) cs.push_back(elem_to_json(F, c.rep));
    out["closure_classes"] = cs;
  }
  return out;
}

json handle_classify(const Field& F, const json& pj) {
  std::vector<Elem> gens;
  for (const json& g : pj.at("gens")) gens.push_back(elem_from_json(F, g));
  std::vector<OrbitKey> orbits = enumerate_elem_abelian_classes(F, gens);
  json out;
  out["count"] = orbits.size();
  json arr = json::array();
  for (const OrbitKey& k : orbits) {
    json o;
    json rep;
    rep["a"] = elem_to_json(F, k.canonical_rep.a.rep);
    rep["b"] = elem_to_json(F, k.canonical_rep.b.rep);
    o["rep"] = rep;
    o["size"] = k.members.size();
    BiquadPoly poly =
        compose_elem_abelian(F, k.canonical_rep.a.rep, k.canonical_rep.b.rep);
    o["polynomial"] = biquad_to_json(poly);
    arr.push_back(o);
  }
  out["orbits"] = arr;
  return out;
}

json handle_normalize(const Field& F, const json& pj) {
  QuarticPoly P = quartic_from_json(F, pj);
  NormalForm nf = normalize(P);
  json out;
  out["kind"] = to_string(nf.kind);
  switch (nf.kind) {
    case NormalForm::Kind::ReducibleRootZero:
    case NormalForm::Kind::ReducibleRootQuarterU:
      out["root"] = elem_to_json(F, nf.root);
      break;
    case NormalForm::Kind::Biquad: {
      const BiquadFormData& b = *nf.biquad;
      out["a"] = elem_to_json(F, b.a);
      out["b"] = elem_to_json(F, b.b);
      out["substitution"] = b.sub.text(F);
      out["form"] = biquad_to_json(b.form(F));
      break;
    }
    case NormalForm::Kind::RT: {
      const RFormData& r = *nf.r_form;
      json rj;
      rj["a"] = elem_to_json(F, r.a);
      rj["b"] = elem_to_json(F, r.b);
      rj["substitution"] = r.sub.text(F);
      rj["form"] = quartic_to_json(r.form(F));
      out["r"] = rj;
      const TFormData& t = *nf.t_form;
      json tj;
      tj["c"] = elem_to_json(F, t.c);
      tj["d"] = elem_to_json(F, t.d);
      tj["substitution"] = t.sub.text(F);
      tj["form"] = quartic_to_json(t.form(F));
      out["t"] = tj;
      break;
    }
  }
  return out;
}

json handle_moduli_check(const Field& F, unsigned long seed, long checks) {
  std::mt19937_64 rng(seed);
  auto rand_elem = [&]() -> Elem {
    if (F.kind() == Field::Kind::Prime) {
      std::uniform_int_distribution<long> d(1, static_cast<long>(F.modulus().get_ui()) - 1);
      return F.make(d(rng));
    }
    std::uniform_int_distribution<long> d(-50, 50);
    long v = d(rng);
    if (v == 0) v = 1;
    return F.make(v);
  };
  auto rand_perm = [&]() -> Perm {
    std::uniform_int_distribution<int> d(0, 5);
    return s3_elements()[d(rng)];
  };

  long eq_fail = 0, act_fail = 0, corr_fail = 0, rewrite_fail = 0, subgroup_fail = 0;
  for (long i = 0; i < checks; ++i) {
    Elem a = rand_elem(), a2 = rand_elem();
    Elem b = rand_elem(), b2 = rand_elem();
    Elem c = rand_elem(), c2 = rand_elem();

    if (!sim_equal(F, a, a2, a, a2)) ++eq_fail;
    if (sim_equal(F, a, a2, b, b2) != sim_equal(F, b, b2, a, a2)) ++eq_fail;
    if (sim_equal(F, a, a2, b, b2) && sim_equal(F, b, b2, c, c2) &&
        !sim_equal(F, a, a2, c, c2))
      ++eq_fail;

    PairClass p = make_pair_class(F, a, a2);
    Perm g = rand_perm(), h = rand_perm();
    if (!pair_equal(F, s3_act(F, s3_elements()[0], p), p)) ++act_fail;
    if (!pair_equal(F, s3_act(F, g, s3_act(F, h, p)),
                    s3_act(F, perm_compose(h, g), p)))
      ++act_fail;
    if (!pair_equal(F, s3_act(F, g, s3_act(F, perm_inverse(g), p)), p)) ++act_fail;

    if (!in_excluded_S(F, a, a2) && !in_excluded_S(F, b, b2)) {
      bool s = sim_equal(F, a, a2, b, b2);
      bool o = orbit_equal(F, orbit(F, make_pair_class(F, a, a2)),
                           orbit(F, make_pair_class(F, b, b2)));
      if (s != o) ++corr_fail;
    }

    bool base_rel = sim_equal(F, a, a2, b, b2);
    Elem bb2 = F.mul(b, b2);
    if (base_rel != sim_equal(F, a, a2, b2, b)) ++rewrite_fail;
    if (base_rel != sim_equal(F, a, a2, b, bb2)) ++rewrite_fail;
    if (base_rel != sim_equal(F, a, a2, b2, bb2)) ++rewrite_fail;
    if (base_rel != sim_equal(F, a, a2, bb2, b)) ++rewrite_fail;
    if (base_rel != sim_equal(F, a, a2, bb2, b2)) ++rewrite_fail;

    Elem one = F.one();
    if (sim1_equal(F, one, a, one, b) != same_class(F, a, b)) ++subgroup_fail;
    if (!in_excluded_S(F, one, F.mul(a, b))) ++subgroup_fail;
    if (!sim1_equal(F, one, F.mul(a, a), one, one)) ++subgroup_fail;
  }

  json out;
  out["field"] = field_to_json(F);
  out["checks"] = checks;
  out["equivalence_failures"] = eq_fail;
  out["action_failures"] = act_fail;
  out["corr_failures"] = corr_fail;
  out["rewrite_failures"] = rewrite_fail;
  out["subgroup_failures"] = subgroup_fail;
  out["all_pass"] =
      eq_fail + act_fail + corr_fail + rewrite_fail + subgroup_fail == 0;
  return out;
}

int handle_oracle_check(long pmax, std::ostream& out, std::ostream& err) {
  out << "p,u,w,criterion,oracle,agree\n";
  long cases = 0, disagreements = 0;
  for (long p = 3; p <= pmax; p += 2) {
    mpz_class pz(p);
    if (!mpz_probab_prime_p(pz.get_mpz_t(), 30)) continue;
    Field F = Field::prime(pz);
    for (long u = 0; u < p; ++u) {
      for (long w = 1; w < p; ++w) {
        BiquadPoly P{F, F.make(u), F.make(w)};
        bool crit = is_irreducible_biquadratic(P);
        bool orc = factor_quartic(P.to_quartic()).irreducible;
        bool agree = crit == orc;
        ++cases;
        if (!agree) ++disagreements;
        out << p << ',' << u << ',' << w << ',' << (crit ? "true" : "false") << ','
            << (orc ? "true" : "false") << ',' << (agree ? "true" : "false") << "\n";
      }
    }
  }
  err << "cases=" << cases << " disagreements=" << disagreements << "\n";
  return disagreements == 0 ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for biquadratic quartic extensions"};
  app.require_subcommand(1);

  std::string field_desc = "Q";
  std::vector<std::string> payloads;
  bool noncyclic = false;
  unsigned long seed = 988088;
  long checks = 1000;
  long pmax = 13;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_desc,
                    "field descriptor: Q, F<p>, or QuadExt:<base>:<d>");
  };

  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "Taylor normal forms of a monic quartic");
  add_field(cmd_normalize);
  cmd_normalize->add_option("payload", payloads, "quartic JSON {u,v,w,z} or @file")
      ->expected(1);

  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "irreducibility and Galois structure");
  add_field(cmd_analyze);
  cmd_analyze->add_option("payload", payloads, "biquadratic JSON {u,w} or @file")
      ->expected(1);

  CLI::App* cmd_iso = app.add_subcommand("iso", "isomorphism of two extensions");
  add_field(cmd_iso);
  cmd_iso->add_flag("--noncyclic", noncyclic,
                    "assert non-cyclic inputs (always the decision procedure used)");
  cmd_iso->add_option("payload", payloads, "two biquadratic JSON payloads")->expected(2);

  CLI::App* cmd_closure =
      app.add_subcommand("closure", "elementary abelian closure report");
  add_field(cmd_closure);
  cmd_closure->add_option("payload", payloads, "biquadratic JSON {u,w} or @file")
      ->expected(1);

  CLI::App* cmd_radical =
      app.add_subcommand("radical", "radical closure trichotomy for V4 parameters");
  add_field(cmd_radical);
  cmd_radical->add_option("payload", payloads, "JSON {a,b} or @file")->expected(1);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "orbit enumeration over a generated subgroup");
  add_field(cmd_classify);
  cmd_classify->add_option("payload", payloads, "JSON {gens:[...]} or @file")->expected(1);

  CLI::App* cmd_moduli = app.add_subcommand("moduli-check", "randomized law checks");
  add_field(cmd_moduli);
  cmd_moduli->add_option("--checks", checks, "iterations per law");
  cmd_moduli->add_option("--seed", seed, "random seed");

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle-check", "criterion-vs-oracle census CSV");
  cmd_oracle->add_option("--p-max", pmax, "largest prime to sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  (void)noncyclic;
  try {
    if (*cmd_oracle) return handle_oracle_check(pmax, out, err);
    Field F = parse_field_desc(field_desc);
    json doc;
    if (*cmd_normalize)
      doc = handle_normalize(F, parse_payload(payloads.at(0)));
    else if (*cmd_analyze)
      doc = handle_analyze(F, parse_payload(payloads.at(0)));
    else if (*cmd_iso)
      doc = handle_iso(F, parse_payload(payloads.at(0)), parse_payload(payloads.at(1)));
    else if (*cmd_closure)
      doc = handle_closure(F, parse_payload(payloads.at(0)));
    else if (*cmd_radical)
      doc = handle_radical(F, parse_payload(payloads.at(0)));
    else if (*cmd_classify)
      doc = handle_classify(F, parse_payload(payloads.at(0)));
    else if (*cmd_moduli)
      doc = handle_moduli_check(F, seed, checks);
    out << doc.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    json j;
    j["error"] = to_string(e.code());
    j["detail"] = e.detail();
    out << j.dump() << "\n";
    return e.code() == ErrorCode::MalformedInput ? 1 : 2;
  } catch (const json::exception& e) {
    json j;
    j["error"] = to_string(ErrorCode::MalformedInput);
    j["detail"] = e.what();
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace biquad
