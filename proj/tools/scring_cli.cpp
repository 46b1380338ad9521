// Command-line front end: construct algebras, run checks, emit reports.
//
// Exit codes: 0 = all asserted properties hold, 1 = a checked property
// failed, 2 = usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "scring/automorphisms.hpp"
#include "scring/bch.hpp"
#include "scring/local_rings.hpp"
#include "scring/serialize.hpp"

using namespace scring;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  struct Prop {
    std::string anchor;
    std::string status;  // "pass" | "fail" | "info"
    std::string detail;
  };
  std::vector<Prop> props;

  void check(const std::string& anchor, bool ok, const std::string& detail) {
    props.push_back({anchor, ok ? "pass" : "fail", detail});
  }
  void note(const std::string& anchor, const std::string& detail) {
    props.push_back({anchor, "info", detail});
  }

  int exit_code() const {
    for (const auto& p : props)
      if (p.status == "fail") return 1;
    return 0;
  }

  json to_json() const {
    json jprops = json::array();
    for (const auto& p : props)
      jprops.push_back({{"anchor", p.anchor}, {"status", p.status}, {"detail", p.detail}});
    return {{"command", command}, {"inputs", inputs}, {"properties", jprops},
            {"exit", exit_code()}};
  }

  int emit(bool as_json) const {
    if (as_json) {
      std::cout << to_json().dump(2) << "\n";
    } else {
      for (const auto& p : props)
        std::cout << "[" << (p.status == "info" ? "info" : (p.status == "pass" ? "PASS" : "FAIL"))
                  << "] " << p.anchor << ": " << p.detail << "\n";
    }
    return exit_code();
  }
};

std::string dims(const Subspace& s) {
  return "dim " + std::to_string(s.dim()) + " of " + std::to_string(s.ambient());
}

std::string subspace_rows(const Subspace& s) {
  if (s.dim() == 0) return "{0}";
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += "; ";
    Vec row = s.basis_row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += row[j].str();
    }
  }
  return out;
}

AdditiveMatrix load_map(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return additive_matrix_from_json(json::parse(in), f);
}

// ----- construct ----------------------------------------------------------------

int run_construct(const std::string& kind, const std::string& field_name, std::size_t n,
                  std::int64_t p, std::size_t m, const std::string& of,
                  const std::string& output) {
  Construction c;
  auto field = [&] { return FieldSpec::parse_name(field_name); };
  if (kind == "heisenberg") {
    c = heisenberg(field(), n);
  } else if (kind == "two-dim-lie") {
    c = two_dim_lie(field());
  } else if (kind == "trivial") {
    c = trivial_mult(field(), n);
  } else if (kind == "truncated-poly") {
    c = truncated_poly(field(), n);
  } else if (kind == "null-quadratic") {
    c = null_quadratic(p, m);
  } else if (kind == "matrix") {
    c = matrix_algebra(field(), n);
  } else if (kind == "matrix-lie") {
    c = matrix_lie(field(), n);
  } else if (kind == "lambda-vector") {
    c = local_sum(field(), trivial_mult(field(), n));
  } else if (kind == "semidirect-double") {
    c = semidirect_double(load_algebra_file(of));
  } else if (kind == "s-of") {
    c = s_of(load_algebra_file(of));
  } else if (kind == "local-sum") {
    c = local_sum(field(), load_algebra_file(of));
  } else {
    throw CLI::ValidationError("unknown construction kind '" + kind + "'");
  }
  json j = construction_to_json(c);
  if (output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw error("cannot open '" + output + "' for writing");
    out << j.dump(2) << "\n";
  }
  return 0;
}

// ----- check --------------------------------------------------------------------

std::string triple_str(const std::array<std::size_t, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

int run_check(const std::string& file, const std::vector<std::string>& expects, bool as_json) {
  Construction c = load_algebra_file(file);
  AxiomReport rep = check_axioms(c.algebra);
  Report r;
  r.command = "check";
  r.inputs = {{"file", file}, {"dim", c.algebra.dim()}, {"field", c.algebra.field()->name()}};
  std::string assoc_extra =
      rep.associative || !rep.associative_violation ? "" : " at " + triple_str(*rep.associative_violation);
  std::string jac_extra =
      rep.lie || !rep.jacobi_violation ? "" : " at " + triple_str(*rep.jacobi_violation);
  r.note("axioms.commutative", rep.commutative ? "holds" : "fails");
  r.note("axioms.associative", (rep.associative ? "holds" : "fails") + assoc_extra);
  r.note("axioms.lie", (rep.lie ? "holds" : "fails") + jac_extra);
  r.note("axioms.two-step-nilpotent", rep.two_step_nilpotent ? "holds" : "fails");
  r.note("axioms.unit", rep.unit ? "unit found" : "no unit");
  r.note("axioms.nilpotency-index",
         rep.nilpotency_index ? std::to_string(*rep.nilpotency_index) : "none");
  for (const std::string& e : expects) {
    if (e == "lie")
      r.check("axioms.lie", rep.lie, rep.lie ? "Lie axioms hold" : "Jacobi/alternating fails" + jac_extra);
    else if (e == "associative")
      r.check("axioms.associative", rep.associative,
              rep.associative ? "associative" : "fails" + assoc_extra);
    else if (e == "commutative")
      r.check("axioms.commutative", rep.commutative, rep.commutative ? "commutative" : "fails");
    else if (e == "unital")
      r.check("axioms.unital", rep.unit.has_value(), rep.unit ? "unit found" : "no unit");
    else if (e == "two-step")
      r.check("axioms.two-step-nilpotent", rep.two_step_nilpotent,
              rep.two_step_nilpotent ? "all triple products vanish" : "a triple product survives");
    else
      throw CLI::ValidationError("unknown --expect '" + e + "'");
  }
  return r.emit(as_json);
}

// ----- invariants ----------------------------------------------------------------

int run_invariants(const std::string& file, bool as_json) {
  Construction c = load_algebra_file(file);
  const Algebra& a = c.algebra;
  Report r;
  r.command = "invariants";
  r.inputs = {{"file", file}, {"dim", a.dim()}, {"field", a.field()->name()}};
  r.note("annihilator", dims(annihilator(a)) + ": " + subspace_rows(annihilator(a)));
  AxiomReport ax = check_axioms(a);
  if (ax.lie) {
    r.note("center", dims(center_lie(a)));
    auto lcs = lower_central_series(a);
    std::string s;
    for (const auto& sub : lcs) s += std::to_string(sub.dim()) + " ";
    r.note("lower-central-series", "dims " + s);
    auto ds = derived_series(a);
    s.clear();
    for (const auto& sub : ds) s += std::to_string(sub.dim()) + " ";
    r.note("derived-series", "dims " + s);
    r.check("center-equals-annihilator", center_lie(a) == annihilator(a),
            "two-sided annihilator agrees with the centralizer condition");
  }
  for (std::size_t k = 2; k <= 3; ++k)
    r.note("power-ideal." + std::to_string(k), dims(power_ideal(a, k)));
  if (c.is_triangular()) {
    TriangularAnnReport t = check_triangular_annihilator(c);
    r.note("triangular.hypothesis",
           t.hypothesis_holds ? "ann(R) = ann_R(M) = ann_R(ann(M))" : "hypothesis fails");
    r.note("triangular.formula-side", dims(t.formula_side));
    r.note("triangular.brute-side", dims(t.brute_side));
    if (t.hypothesis_holds)
      r.check("triangular.annihilator-formula", t.sides_equal,
              "product formula matches the brute-force annihilator");
    r.note("cross.ann-r", dims(t.cross.ann_r));
    r.note("cross.ann-r-of-m", dims(t.cross.ann_r_of_m));
    r.note("cross.ann-m-of-r", dims(t.cross.ann_m_of_r));
    r.note("cross.ann-r-of-ann-m", dims(t.cross.ann_r_of_ann_m));
    r.note("cross.ann-m", dims(t.cross.ann_m));
  }
  return r.emit(as_json);
}

// ----- chain ---------------------------------------------------------------------

int run_chain(const std::string& file, bool as_json) {
  Construction c = load_algebra_file(file);
  ChainReport rep = analysis_chain(c);
  Report r;
  r.command = "chain";
  r.inputs = {{"file", file}, {"dim", c.algebra.dim()}};
  r.note("chain.lambda1", dims(rep.lambda1) + ": " + subspace_rows(rep.lambda1));
  r.note("chain.annihilator", dims(rep.ann_lambda) + ": " + subspace_rows(rep.ann_lambda));
  r.check("chain.kernel-f1", rep.kernel1_matches,
          "kernel(f1) = ann of the embedded ann(M) basis");
  r.check("chain.kernel-f2", rep.kernel2_matches, "kernel(f2|Lambda1) = ann(Lambda)");
  r.check("chain.lambda1-shape", rep.lambda1_product_shape,
          "Lambda1 = ann_R(ann(M)) x M");
  r.check("chain.images-f1", rep.images1_in_m, "every f1 image inside {0} x M");
  r.check("chain.images-f2", rep.images2_in_m, "every f2 image inside {0} x M");
  r.note("chain.hypothesis", rep.hypothesis_holds ? "holds" : "fails");
  if (rep.hypothesis_holds)
    r.check("chain.lambda1-ann-r", rep.lambda1_is_annr_times_m, "Lambda1 = ann(R) x M");
  if (rep.s_case) {
    const auto& sc = *rep.s_case;
    r.note("chain.s.z-center", dims(sc.center_b));
    r.check("chain.s.s1-shape", sc.s1_shape, "S1 = (z(B) x B) x (z(B) x B), " + dims(sc.s1));
    r.check("chain.s.s2-is-ann", sc.s2_is_ann, "S2 = ann(S), " + dims(sc.s2));
    r.check("chain.s.image-block", sc.image_is_center_block,
            "f1 images sum to the bottom central block");
    r.note("chain.s.z-properties",
           std::string("[z,B] = z(B): ") + (sc.bracket_property ? "yes" : "no") +
               "; centralizer(z) = z(B): " + (sc.centralizer_property ? "yes" : "no"));
  }
  return r.emit(as_json);
}

// ----- derivations -----------------------------------------------------------------

int run_derivations(const std::string& file, const std::string& vanish, bool as_json) {
  Construction c = load_algebra_file(file);
  const Algebra& a = c.algebra;
  Report r;
  r.command = "derivations";
  r.inputs = {{"file", file}, {"dim", a.dim()}};
  Subspace der = derivation_space(a);
  r.note("derivations.dimension", std::to_string(der.dim()));
  if (!vanish.empty()) {
    std::vector<Element> elems;
    std::string cur;
    for (char ch : vanish + ";") {
      if (ch == ';') {
        if (!cur.empty()) elems.push_back(make_element(a, parse_vector(a.field(), cur, a.dim())));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    Subspace sub = derivations_vanishing_on(a, elems);
    r.note("derivations.vanishing.dimension", std::to_string(sub.dim()));
    r.check("derivations.vanishing.contained", der.contains(sub),
            "constrained space inside the full derivation space");
    der = sub;
  }
  for (std::size_t i = 0; i < der.dim(); ++i) {
    Matrix d = unflatten(a.field(), der.basis_row(i), a.dim());
    std::string rows;
    for (std::size_t rr = 0; rr < d.rows(); ++rr) {
      if (rr) rows += "; ";
      for (std::size_t cc = 0; cc < d.cols(); ++cc) {
        if (cc) rows += ",";
        rows += d.at(rr, cc).str();
      }
    }
    r.note("derivations.basis." + std::to_string(i), rows);
  }
  return r.emit(as_json);
}

// ----- lift-aut --------------------------------------------------------------------

int run_lift_aut(const std::string& file, const std::string& kind, const std::string& map_file,
                 const std::string& output, bool as_json) {
  Construction c = load_algebra_file(file);
  Report r;
  r.command = "lift-aut";
  r.inputs = {{"file", file}, {"kind", kind}, {"map", map_file}};
  AdditiveMap sigma;
  if (kind == "triangular") {
    sigma = lift_aut_triangular(c, load_map(map_file, c.algebra.field()));
  } else if (kind == "local-g") {
    sigma = lift_aut_local_g(c, load_map(map_file, c.algebra.field()).lin);
  } else if (kind == "local-f") {
    sigma = lift_aut_local_f(c, load_map(map_file, c.algebra.field()).lin);
  } else {
    throw CLI::ValidationError("unknown --kind '" + kind + "'");
  }
  r.check("aut.verified", verify_automorphism(sigma),
          "basis-pair multiplicativity and invertibility");
  if (c.is_triangular()) {
    bool fixes = true;
    for (std::size_t i = 0; i < c.m_dim(); ++i) {
      Vec m = c.embed_m(vec_unit(c.algebra.field(), c.m_dim(), i));
      if (sigma.apply(m) != m) fixes = false;
    }
    r.check("aut.fixes-m", fixes, "fixes {0} x M pointwise");
  }
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw error("cannot open '" + output + "' for writing");
    out << additive_matrix_to_json(sigma.matrix()).dump(2) << "\n";
    r.note("aut.saved", output);
  }
  return r.emit(as_json);
}

// ----- orbit -----------------------------------------------------------------------

int run_orbit(const std::string& file, const std::string& map_file, const std::string& start,
              const std::string& modulo, bool modulo_ann, std::size_t n, bool as_json) {
  Construction c = load_algebra_file(file);
  const Field& f = c.algebra.field();
  AdditiveMap sigma(c.algebra, c.algebra, load_map(map_file, f));
  Element a = make_element(c.algebra, parse_vector(f, start, c.algebra.dim()));
  Subspace mod = modulo_ann ? annihilator(c.algebra)
                            : (modulo.empty() ? Subspace::zero(f, c.algebra.dim())
                                              : parse_subspace(f, modulo, c.algebra.dim()));
  OrbitReport rep = orbit(sigma, a, mod, n);
  Report r;
  r.command = "orbit";
  r.inputs = {{"file", file}, {"n", n}, {"start", start}};
  r.note("orbit.distinct-cosets", std::to_string(rep.distinct_cosets));
  r.note("orbit.period", rep.period ? std::to_string(*rep.period) : "none");
  return r.emit(as_json);
}

// ----- witness ---------------------------------------------------------------------

int run_witness(const std::string& kind, std::int64_t characteristic, std::size_t n,
                std::size_t dim_v, std::size_t heis_n, const std::string& fix, bool as_json) {
  WitnessReport rep;
  auto parse_params = [&](const Field& kt, std::size_t dim) {
    std::vector<Vec> params;
    std::string cur;
    for (char ch : fix + ";") {
      if (ch == ';') {
        if (!cur.empty()) params.push_back(parse_vector(kt, cur, dim));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    return params;
  };
  if (kind == "vector") {
    Field base = characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
    Field kt = FieldSpec::rational_functions(base);
    rep = witness_vector(kt, dim_v, n, parse_params(kt, dim_v + 1));
  } else if (kind == "lie") {
    Field base = characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
    Field kt = FieldSpec::rational_functions(base);
    rep = witness_lie(kt, heis_n, n, parse_params(kt, 2 * (2 * heis_n + 1)));
  } else if (kind == "s_ring") {
    if (characteristic == 0)
      throw CLI::ValidationError("s_ring requires a positive characteristic");
    rep = witness_s_ring(characteristic, heis_n, n);
  } else {
    throw CLI::ValidationError("unknown --kind '" + kind + "'");
  }
  Report r;
  r.command = "witness";
  r.inputs = {{"kind", kind}, {"char", characteristic}, {"n", n}, {"field", rep.field_name}};
  r.note("witness.distinct", std::to_string(rep.distinct) + " distinct cosets");
  if (rep.period) r.note("witness.period", std::to_string(*rep.period));
  if (rep.expected_max) r.note("witness.ceiling", std::to_string(*rep.expected_max));
  for (const auto& d : rep.detail) r.note("witness.detail", d);
  r.check("witness.outcome", rep.pass,
          characteristic == 0 ? "orbit exceeds the requested bound"
                              : "orbit behaviour matches the characteristic");
  return r.emit(as_json);
}

// ----- bch -------------------------------------------------------------------------

int run_bch(const std::string& file, const std::string& mode, std::uint64_t seed, bool as_json) {
  Construction c = load_algebra_file(file);
  if (c.algebra.field()->characteristic() == 2) {
    std::cerr << "error: 1/2 unavailable in characteristic 2\n";
    return 2;
  }
  BchGroup g(c.algebra);
  GroupCheckReport rep = check_group(g, mode == "exhaustive", seed);
  Report r;
  r.command = "bch";
  r.inputs = {{"file", file}, {"mode", mode}, {"seed", seed}};
  r.note("bch.elements", rep.exhaustive ? std::to_string(rep.elements) : "sampled");
  r.note("bch.triples", std::to_string(rep.triples_checked));
  r.check("bch.associative", rep.associative, "star is associative");
  r.check("bch.identity", rep.identity_ok, "0 is the identity");
  r.check("bch.inverses", rep.inverses_ok, "-x inverts x");
  r.check("bch.powers", rep.power_ok, "n-fold star equals n-fold sum, n <= 10");
  r.check("bch.commutator-bracket", rep.commutator_matches,
          "group commutator equals the Lie bracket on basis pairs");
  if (rep.exhaustive)
    r.check("bch.center", rep.center_matches, "group center equals the Lie center");
  r.check("bch.recovery", g.recovered_algebra() == g.algebra(),
          "recovered operations reproduce the structure constants");
  return r.emit(as_json);
}

// ----- localring ---------------------------------------------------------------------

int run_localring(const std::string& file, std::uint64_t zmod, const std::string& maximal,
                  std::size_t teich_n, bool as_json) {
  Report r;
  r.command = "localring";
  if (zmod > 0) {
    r.inputs = {{"zmod", zmod}};
    ZmodRing ring(zmod);
    r.note("local.characteristic", std::to_string(ring.characteristic()));
    std::uint64_t p = 2;
    while (p <= zmod && zmod % p != 0) ++p;
    std::uint64_t m = zmod;
    while (p <= zmod && m % p == 0) m /= p;
    bool prime_power = zmod > 1 && m == 1;
    r.note("local.is-local", prime_power ? "local (prime power modulus)" : "not local");
    ZnCohenReport cz = zn_subfield_check(zmod);
    for (const auto& cand : cz.candidates) r.note("local.subfield-candidate", cand);
    r.note("local.subfield", cz.any_subfield ? "subfield exists" : "no subfield");
    if (teich_n > 0) {
      TeichmullerReport t = mult_representatives(
          ring, [&](std::uint64_t a) { return a % p == 0; }, static_cast<std::int64_t>(p),
          teich_n);
      std::string reps;
      for (std::uint64_t a : t.reps) reps += std::to_string(a) + " ";
      r.note("local.teichmuller.set", reps);
      r.check("local.teichmuller", t.ok,
              "unique per class, multiplicatively closed, p^k-compatible");
    }
    return r.emit(as_json);
  }
  Construction c = load_algebra_file(file);
  const Field& f = c.algebra.field();
  Subspace m = maximal.empty() && c.is_triangular()
                   ? c.m_ideal()
                   : parse_subspace(f, maximal, c.algebra.dim());
  r.inputs = {{"file", file}, {"dim", c.algebra.dim()}};
  LocalReport rep = is_local(c.algebra, m);
  r.check("local.is-local", rep.local,
          rep.local ? "nilpotent maximal ideal with field residue"
                    : (rep.failures.empty() ? "fails" : rep.failures.front()));
  if (rep.nilpotency_k) r.note("local.m-nilpotency", std::to_string(*rep.nilpotency_k));
  r.note("local.residue", rep.residue_desc);
  r.note("local.characteristic", std::to_string(characteristic(c.algebra)));
  Subspace ann_m = annihilator(c.algebra, m).intersect(m);
  Subspace m2 = subspace_power(c.algebra, m, 2);
  r.note("local.ann-m", dims(ann_m));
  r.note("local.m2-plus-ann", dims(m2.sum(ann_m)));
  r.note("local.asm-criterion", ann_m == m ? "m = ann(m)" : "ann(m) is a proper subset of m");
  r.note("local.asm-hypothesis", "connectedness of m is assumed, not verified");
  if (teich_n > 0 && f->finite()) {
    AlgebraRing view(c.algebra);
    TeichmullerReport t = mult_representatives(
        view, [&](std::uint64_t a) { return m.contains(view.decode(a)); },
        f->characteristic(), teich_n);
    r.note("local.teichmuller.count", std::to_string(t.reps.size()));
    r.check("local.teichmuller", t.ok,
            "unique per class, multiplicatively closed, p^k-compatible");
  }
  return r.emit(as_json);
}

// ----- decompose ----------------------------------------------------------------------

int run_decompose(const std::string& file, std::uint64_t zmod, bool as_json) {
  Report r;
  r.command = "decompose";
  IdempotentDecomposition d;
  if (zmod > 0) {
    r.inputs = {{"zmod", zmod}};
    ZmodRing ring(zmod);
    d = idempotent_decomposition(ring);
    std::string prim;
    for (std::uint64_t u : d.primitive) prim += ring.str(u) + " ";
    r.note("decompose.primitive-idempotents", prim);
  } else {
    Construction c = load_algebra_file(file);
    r.inputs = {{"file", file}};
    AlgebraRing view(c.algebra);
    d = idempotent_decomposition(view);
    std::string prim;
    for (std::uint64_t u : d.primitive) prim += "(" + view.str(u) + ") ";
    r.note("decompose.primitive-idempotents", prim);
  }
  std::string sizes;
  for (const auto& fct : d.factors) sizes += std::to_string(fct.size()) + " ";
  r.note("decompose.factor-sizes", sizes);
  r.check("decompose.orthogonal", d.orthogonal, "u_i u_j = 0 for i != j");
  r.check("decompose.sum-one", d.sum_is_one, "idempotents sum to 1");
  r.check("decompose.reassembly", d.reassembly_bijective && d.reassembly_multiplicative,
          "a -> (a u_i) is a ring isomorphism onto the product");
  return r.emit(as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on structure-constant rings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report");

  auto* sc_construct = app.add_subcommand("construct", "build a stock algebra");
  std::string kind, field_name = "Q", of, output;
  std::size_t n = 1, m_count = 1, dim_v = 2, heis_n = 1, orbit_n = 10, teich_n = 0;
  std::int64_t p = 3, characteristic_opt = 0;
  sc_construct->add_option("kind", kind, "heisenberg|two-dim-lie|trivial|truncated-poly|"
                                          "null-quadratic|matrix|matrix-lie|lambda-vector|"
                                          "semidirect-double|s-of|local-sum")->required();
  sc_construct->add_option("--field", field_name, "Q, GF(p), GF(p^k), Q(t), GF(p)(t)");
  sc_construct->add_option("--n", n, "size parameter");
  sc_construct->add_option("--p", p, "prime");
  sc_construct->add_option("--m", m_count, "generator count");
  sc_construct->add_option("--of", of, "ingredient algebra file");
  sc_construct->add_option("-o,--output", output, "output file (stdout otherwise)");

  auto* sc_check = app.add_subcommand("check", "axiom report");
  std::string file;
  std::vector<std::string> expects;
  sc_check->add_option("file", file)->required();
  sc_check->add_option("--expect", expects, "lie|associative|commutative|unital|two-step");

  auto* sc_inv = app.add_subcommand("invariants", "annihilators, centers, power ideals");
  sc_inv->add_option("file", file)->required();

  auto* sc_chain = app.add_subcommand("chain", "two-step analysis of a triangular ring");
  sc_chain->add_option("file", file)->required();

  auto* sc_der = app.add_subcommand("derivations", "derivation space");
  std::string vanish;
  sc_der->add_option("file", file)->required();
  sc_der->add_option("--vanish", vanish, "semicolon-separated elements to kill");

  auto* sc_lift = app.add_subcommand("lift-aut", "lift a map to a ring automorphism");
  std::string lift_kind = "triangular", map_file;
  sc_lift->add_option("file", file)->required();
  sc_lift->add_option("--kind", lift_kind, "triangular|local-g|local-f");
  sc_lift->add_option("--map", map_file, "JSON additive matrix {lin, der?}")->required();
  std::string lift_output;
  sc_lift->add_option("-o,--output", lift_output, "write the lifted map as JSON");

  auto* sc_orbit = app.add_subcommand("orbit", "iterate an automorphism");
  std::string start, modulo;
  bool modulo_ann = false;
  sc_orbit->add_option("file", file)->required();
  sc_orbit->add_option("--map", map_file, "JSON additive matrix of the automorphism")->required();
  sc_orbit->add_option("--start", start, "comma-separated coordinates")->required();
  sc_orbit->add_option("--modulo", modulo, "semicolon-separated subspace rows");
  sc_orbit->add_flag("--modulo-ann", modulo_ann, "work modulo the annihilator");
  sc_orbit->add_option("--n", orbit_n, "iterations");

  auto* sc_wit = app.add_subcommand("witness", "orbit-distinctness witnesses");
  std::string wit_kind = "vector";
  sc_wit->add_option("--kind", wit_kind, "vector|lie|s_ring")->required();
  sc_wit->add_option("--char", characteristic_opt, "0 or a prime");
  sc_wit->add_option("--n", orbit_n, "requested bound");
  sc_wit->add_option("--dim", dim_v, "module dimension (vector kind)");
  sc_wit->add_option("--heis", heis_n, "Heisenberg parameter (lie/s_ring kinds)");
  std::string fix;
  sc_wit->add_option("--fix", fix, "semicolon-separated elements the automorphism must fix");

  auto* sc_bch = app.add_subcommand("bch", "group built from a 2-step nilpotent Lie ring");
  std::string mode = "random";
  std::uint64_t seed = 0;
  sc_bch->add_option("file", file)->required();
  sc_bch->add_option("--check", mode, "exhaustive|random");
  sc_bch->add_option("--seed", seed, "sampling seed");

  auto* sc_local = app.add_subcommand("localring", "local-ring predicates");
  std::uint64_t zmod = 0;
  std::string maximal;
  sc_local->add_option("file", file);
  sc_local->add_option("--zmod", zmod, "use Z/n instead of a file");
  sc_local->add_option("--maximal-ideal", maximal, "semicolon-separated subspace rows");
  sc_local->add_option("--teichmuller", teich_n, "n with m^n = 0");

  auto* sc_dec = app.add_subcommand("decompose", "primitive idempotent decomposition");
  sc_dec->add_option("file", file);
  sc_dec->add_option("--zmod", zmod, "use Z/n instead of a file");

  try {
    app.parse(argc, argv);
    if (sc_construct->parsed())
      return run_construct(kind, field_name, n, p, m_count, of, output);
    if (sc_check->parsed()) return run_check(file, expects, as_json);
    if (sc_inv->parsed()) return run_invariants(file, as_json);
    if (sc_chain->parsed()) return run_chain(file, as_json);
    if (sc_der->parsed()) return run_derivations(file, vanish, as_json);
    if (sc_lift->parsed()) return run_lift_aut(file, lift_kind, map_file, lift_output, as_json);
    if (sc_orbit->parsed())
      return run_orbit(file, map_file, start, modulo, modulo_ann, orbit_n, as_json);
    if (sc_wit->parsed())
      return run_witness(wit_kind, characteristic_opt, orbit_n, dim_v, heis_n, fix, as_json);
    if (sc_bch->parsed()) return run_bch(file, mode, seed, as_json);
    if (sc_local->parsed()) return run_localring(file, zmod, maximal, teich_n, as_json);
    if (sc_dec->parsed()) return run_decompose(file, zmod, as_json);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
