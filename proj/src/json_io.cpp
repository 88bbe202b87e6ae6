#include "json_io.hpp"

#include <chrono>

#include "version.hpp"

namespace coverlab::io {

namespace {

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail_input("Schema", std::string("missing required field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t u64_field(const json& j, const char* key, std::uint64_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer())
    fail_input("Schema", std::string("field \"") + key + "\" must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0)
    fail_input("Schema", std::string("field \"") + key + "\" must be nonnegative");
  return v.get<std::uint64_t>();
}

}  // namespace

Int int_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_string()) return parse_int_literal(v.get<std::string>());
  fail_input("Schema", std::string(what) + " must be an integer or decimal string");
}

json int_to_json(const Int& v) {
  // Stay inside the exactly representable double range so any JSON consumer
  // round-trips the value.
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

groups::FiniteAbelianGroup parse_group(const json& j) {
  const json& factors = require_field(j, "invariant_factors");
  if (!factors.is_array()) fail_input("Schema", "invariant_factors must be an array");
  std::vector<Int> d;
  for (const auto& v : factors) d.push_back(int_from_json(v, "invariant factor"));
  return groups::FiniteAbelianGroup(std::move(d));
}

namespace {

groups::GroupElement parse_element(const json& j, const groups::FiniteAbelianGroup& g,
                                   const char* what) {
  if (!j.is_array()) fail_input("Schema", std::string(what) + " must be a coordinate array");
  std::vector<Int> coords;
  for (const auto& v : j) coords.push_back(int_from_json(v, what));
  if (coords.size() != g.rank())
    fail_input("Schema", std::string(what) + " has wrong coordinate count");
  return g.reduce(std::move(coords));
}

std::vector<groups::GroupElement> parse_generators(const json& j,
                                                   const groups::FiniteAbelianGroup& g) {
  const json& gens = require_field(j, "generators");
  if (!gens.is_array()) fail_input("Schema", "generators must be an array of coordinate arrays");
  std::vector<groups::GroupElement> out;
  for (const auto& v : gens) out.push_back(parse_element(v, g, "generator"));
  return out;
}

}  // namespace

groups::Subgroup parse_subgroup(const json& j, const groups::FiniteAbelianGroup& g,
                                std::uint64_t bound) {
  return groups::Subgroup::from_generators(g, parse_generators(j, g), bound);
}

groups::Coset parse_coset(const json& j, const groups::FiniteAbelianGroup& g,
                          std::uint64_t bound) {
  groups::Subgroup s = parse_subgroup(require_field(j, "subgroup"), g, bound);
  groups::GroupElement rep = parse_element(require_field(j, "rep"), g, "coset representative");
  return groups::Coset(std::move(s), rep);
}

covers::CoverProblem parse_cover_problem(const json& j) {
  covers::CoverProblem problem{parse_group(require_field(j, "group"))};
  problem.bound = u64_field(j, "bound", groups::kDefaultEnumerationBound);

  const std::string mode = require_field(j, "mode").get<std::string>();
  if (mode == "subgroups") problem.mode = covers::CoverMode::subgroups;
  else if (mode == "cosets") problem.mode = covers::CoverMode::cosets;
  else if (mode == "subsemigroups") problem.mode = covers::CoverMode::subsemigroups;
  else fail_input("Schema", "mode must be subgroups, cosets or subsemigroups");

  const json& parts = require_field(j, "parts");
  if (!parts.is_array()) fail_input("Schema", "parts must be an array");
  groups::Enumeration en = groups::Enumeration::build(problem.group, problem.bound);
  for (const auto& pj : parts) {
    switch (problem.mode) {
      case covers::CoverMode::subgroups:
        problem.parts.push_back(
            covers::CoverPart::from_subgroup(parse_subgroup(pj, problem.group, problem.bound)));
        break;
      case covers::CoverMode::cosets:
        problem.parts.push_back(
            covers::CoverPart::from_coset(parse_coset(pj, problem.group, problem.bound)));
        break;
      case covers::CoverMode::subsemigroups: {
        // Parts are addition-closures of the given generators; in a finite
        // group that closure is the generated subgroup.
        auto gens = parse_generators(pj, problem.group);
        std::vector<std::uint32_t> seed;
        for (const auto& e : gens) seed.push_back(en.index_of(e));
        auto closed = groups::semigroup_closure(en, seed);
        problem.parts.push_back(covers::CoverPart::from_subgroup(
            groups::Subgroup::from_indices(problem.group, en, std::move(closed))));
        break;
      }
    }
  }
  return problem;
}

std::pair<std::size_t, std::vector<lattices::LatticeCoset>> parse_lattice_cover(const json& j) {
  const auto ambient = static_cast<std::size_t>(u64_field(j, "ambient", 0));
  if (ambient == 0) fail_input("Schema", "ambient dimension must be a positive integer");
  const json& cosets = require_field(j, "cosets");
  if (!cosets.is_array()) fail_input("Schema", "cosets must be an array");

  std::vector<lattices::LatticeCoset> out;
  for (const auto& cj : cosets) {
    const json& basis = require_field(cj, "basis");
    if (!basis.is_array()) fail_input("Schema", "basis must be an array of integer vectors");
    std::vector<lattices::IntVec> gens;
    for (const auto& row : basis) {
      if (!row.is_array()) fail_input("Schema", "basis rows must be integer arrays");
      lattices::IntVec v;
      for (const auto& x : row) v.push_back(int_from_json(x, "basis entry"));
      gens.push_back(std::move(v));
    }
    lattices::IntVec shift(ambient, 0);
    if (cj.contains("shift")) {
      const json& sj = cj.at("shift");
      if (!sj.is_array() || sj.size() != ambient)
        fail_input("Schema", "shift must be an integer vector of the ambient dimension");
      for (std::size_t i = 0; i < ambient; ++i) shift[i] = int_from_json(sj[i], "shift entry");
    }
    out.emplace_back(lattices::Lattice::from_generators(ambient, gens), std::move(shift));
  }
  return {ambient, std::move(out)};
}

namespace {

descriptors::CardinalTag parse_cardinal(const json& v, const char* what) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return descriptors::CardinalTag::finite(int_from_json(v, what));
  if (!v.is_string())
    fail_input("Schema", std::string(what) + " must be an integer or a cardinal tag string");
  const std::string s = v.get<std::string>();
  if (s.rfind("finite:", 0) == 0)
    return descriptors::CardinalTag::finite(parse_int_literal(s.substr(7)));
  if (s == "countable") return descriptors::CardinalTag::countable();
  if (s.rfind("symbolic:", 0) == 0) return descriptors::CardinalTag::symbolic(s.substr(9));
  fail_input("Schema", std::string(what) + ": unknown cardinal tag \"" + s + "\"");
}

}  // namespace

descriptors::GroupDescriptor parse_descriptor(const json& j) {
  if (!j.is_object()) fail_input("Schema", "descriptor must be an object");
  descriptors::GroupDescriptor d;
  if (j.contains("rational_rank")) d.rational_rank = parse_cardinal(j.at("rational_rank"), "rational_rank");
  if (j.contains("prufer")) {
    const json& pr = j.at("prufer");
    if (!pr.is_array()) fail_input("Schema", "prufer must be an array of primes");
    for (const auto& v : pr) d.prufer.push_back(int_from_json(v, "prufer prime"));
  }
  if (j.contains("bounded_torsion")) {
    const json& bt = j.at("bounded_torsion");
    if (!bt.is_array()) fail_input("Schema", "bounded_torsion must be an array");
    for (const auto& ej : bt) {
      descriptors::TorsionEntry e;
      e.q = int_from_json(require_field(ej, "q"), "torsion prime");
      const json& k = require_field(ej, "k");
      if (k.is_string() && k.get<std::string>() == "unbounded") {
        e.unbounded_exponent = true;
      } else {
        Int kk = int_from_json(k, "torsion exponent");
        if (kk < 1 || kk > 1000000) fail_input("Schema", "torsion exponent out of range");
        e.k = static_cast<unsigned>(kk);
      }
      if (ej.contains("mult")) e.mult = parse_cardinal(ej.at("mult"), "mult");
      d.bounded_torsion.push_back(std::move(e));
    }
  }
  d.validate();
  return d;
}

witnesses::RationalFunction parse_rational_function(const json& j, std::uint32_t p) {
  auto coeffs = [&](const json& v, const char* what) {
    if (!v.is_array()) fail_input("Schema", std::string(what) + " must be a coefficient array");
    std::vector<std::uint32_t> c;
    for (const auto& x : v) {
      Int value = mod_floor(int_from_json(x, what), Int(p));
      c.push_back(static_cast<std::uint32_t>(value));
    }
    return witnesses::GfpPoly(p, std::move(c));
  };
  if (j.is_array())  // plain polynomial shorthand
    return witnesses::RationalFunction::from_poly(coeffs(j, "coefficients"));
  witnesses::GfpPoly num = coeffs(require_field(j, "num"), "num");
  witnesses::GfpPoly den = j.contains("den") ? coeffs(j.at("den"), "den")
                                             : witnesses::GfpPoly::constant(p, 1);
  return witnesses::RationalFunction(std::move(num), std::move(den));
}

witnesses::RefuteRequest parse_refute_request(const json& j) {
  const Int p = int_from_json(require_field(j, "p"), "p");
  if (p < 2 || p > 65521 || !is_probable_prime(p))
    fail_input("Schema", "p must be a prime <= 65521");
  const Int k = int_from_json(require_field(j, "k"), "k");
  if (k < 2 || k > 64) fail_input("Schema", "k must be in [2, 64]");

  witnesses::RefuteRequest req;
  req.subfield = {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)};

  const std::string mode = require_field(j, "mode").get<std::string>();
  if (mode == "additive") req.mode = witnesses::CosetMode::additive;
  else if (mode == "multiplicative") req.mode = witnesses::CosetMode::multiplicative;
  else fail_input("Schema", "mode must be additive or multiplicative");

  const json& shifts = require_field(j, "shifts");
  if (!shifts.is_array() || shifts.empty())
    fail_input("Schema", "shifts must be a non-empty array");
  for (const auto& s : shifts)
    req.shifts.push_back(parse_rational_function(s, req.subfield.p));

  Int bound = j.contains("degree_bound") ? int_from_json(j.at("degree_bound"), "degree_bound")
                                         : Int(6);
  if (bound < 1 || bound > 64) fail_input("Schema", "degree_bound must be in [1, 64]");
  req.degree_bound = static_cast<long>(bound);
  return req;
}

// ---------------------------------------------------------------------------
// Emission

json element_to_json(const groups::GroupElement& e) {
  json out = json::array();
  for (const Int& c : e.coords) out.push_back(int_to_json(c));
  return out;
}

json vector_to_json(const lattices::IntVec& v) {
  json out = json::array();
  for (const Int& c : v) out.push_back(int_to_json(c));
  return out;
}

json subgroup_to_json(const groups::Subgroup& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(element_to_json(g));
  return json{{"generators", gens}, {"order", int_to_json(Int(s.order()))}};
}

json rf_to_json(const witnesses::RationalFunction& f) {
  json num = json::array(), den = json::array();
  for (auto c : f.num().coeffs()) num.push_back(c);
  for (auto c : f.den().coeffs()) den.push_back(c);
  return json{{"num", num}, {"den", den}};
}

namespace {

json cover_report_to_json(const covers::CoverReport& r) {
  json witnesses = json::object();
  if (!r.missing_after_removal.empty()) {
    json removal = json::array();
    for (const auto& [part, e] : r.missing_after_removal)
      removal.push_back(json{{"part", part}, {"witness", element_to_json(e)}});
    witnesses["removal"] = removal;
  }
  if (r.uncovered_witness) witnesses["uncovered"] = element_to_json(*r.uncovered_witness);
  return json{{"covered", r.covered}, {"proper", r.proper}, {"witnesses", witnesses}};
}

json lattice_report_to_json(const lattices::LatticeCoverReport& r) {
  json witnesses = json::object();
  json removal = json::array();
  bool any = false;
  for (std::size_t i = 0; i < r.removal_witnesses.size(); ++i)
    if (r.removal_witnesses[i]) {
      removal.push_back(json{{"part", i}, {"witness", vector_to_json(*r.removal_witnesses[i])}});
      any = true;
    }
  if (any) witnesses["removal"] = removal;
  if (r.uncovered_witness) witnesses["uncovered"] = vector_to_json(*r.uncovered_witness);
  return json{{"covered", r.covered},
              {"proper", r.proper},
              {"modulus", int_to_json(r.modulus)},
              {"witnesses", witnesses}};
}

json base_report(const char* command, const char* label) {
  return json{{"command", command}, {"label", label}, {"tool_version", kToolVersion}};
}

const char* outcome_name(Status s) {
  switch (s) {
    case Status::ok: return "verified";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
    default: return "error";
  }
}

}  // namespace

RunResult run_descriptor_check(const std::string& predicate, const json& descriptor) {
  descriptors::GroupDescriptor d = parse_descriptor(descriptor);

  descriptors::Verdict v;
  const char* label = nullptr;
  if (predicate == "artinian") {
    std::optional<Int> m_bound;
    if (descriptor.contains("m_bound")) m_bound = int_from_json(descriptor.at("m_bound"), "m_bound");
    v = descriptors::is_artinian_additive(d, m_bound);
    label = "Lemma 2 (Artinian additive shape)";
  } else if (predicate == "theorem1") {
    v = descriptors::theorem1_not_proper_union(d);
    label = "Theorem 1 (proper unions of subgroups)";
  } else if (predicate == "corollary1") {
    v = descriptors::corollary1_not_coset_union(d);
    label = "Corollary 1 (proper unions of cosets)";
  } else if (predicate == "theorem2") {
    v = descriptors::theorem2_not_coset_union(d);
    label = "Theorem 2 (coset covers under the minimal condition)";
  } else if (predicate == "corollary2") {
    v = descriptors::corollary2_not_subgroup_union(d);
    label = "Corollary 2 (subgroup covers under the minimal condition)";
  } else {
    fail_input("Schema", "unknown predicate \"" + predicate + "\"");
  }

  RunResult out;
  out.status = v.value ? Status::ok : Status::refuted;
  out.report = base_report("descriptor-check", label);
  out.report["predicate"] = predicate;
  out.report["outcome"] = outcome_name(out.status);
  out.report["verdict"] = json{{"value", v.value}, {"clause", v.clause}, {"detail", v.detail}};
  return out;
}

RunResult run_group_cover(const std::string& action, const json& problem_json) {
  covers::CoverProblem problem = parse_cover_problem(problem_json);
  const char* label = problem.mode == covers::CoverMode::subgroups
                          ? "Theorem 1 (subgroup covers)"
                          : problem.mode == covers::CoverMode::cosets
                                ? "Corollary 1 (coset covers)"
                                : "Theorem 4 (subsemigroup covers)";

  RunResult out;
  out.report = base_report("group-cover", label);
  out.report["action"] = action;
  out.report["mode"] = require_field(problem_json, "mode").get<std::string>();

  if (action == "verify") {
    covers::CoverReport r = covers::verify_proper_union(problem);
    out.status = r.proper ? Status::ok : Status::refuted;
    out.report["outcome"] = outcome_name(out.status);
    out.report["report"] = cover_report_to_json(r);
    return out;
  }

  if (action == "minimal") {
    covers::MinimalCoverResult r;
    if (problem.mode == covers::CoverMode::subgroups) {
      r = covers::minimal_subgroup_cover(problem.group, problem.bound);
    } else if (problem.mode == covers::CoverMode::subsemigroups) {
      auto sr = covers::minimal_subsemigroup_cover(problem.group, problem.bound);
      r = sr.result;
      out.report["subsemigroups"] = sr.subsemigroup_count;
      out.report["subgroups"] = sr.subgroup_count;
    } else {
      fail_input("Schema", "minimal search is defined for subgroups and subsemigroups");
    }
    if (r.found) {
      out.status = Status::ok;
      out.report["k"] = r.k;
      json cover = json::array();
      for (const auto& s : r.cover) cover.push_back(subgroup_to_json(s));
      out.report["cover"] = cover;
    } else {
      out.status = Status::refuted;
      out.report["no_cover"] = true;
      out.report["reason"] = "cyclic-group";
      if (r.nocover_generator) out.report["generator"] = element_to_json(*r.nocover_generator);
    }
    out.report["outcome"] = outcome_name(out.status);
    return out;
  }

  if (action == "construct") {
    auto r = covers::construct_subgroup_cover(problem.group, problem.bound);
    if (r.found) {
      covers::CoverProblem check{problem.group, covers::CoverMode::subgroups, {}, problem.bound};
      for (const auto& s : r.cover) check.parts.push_back(covers::CoverPart::from_subgroup(s));
      covers::CoverReport verification = covers::verify_proper_union(check);
      out.status = verification.proper ? Status::ok : Status::internal_error;
      out.report["p"] = int_to_json(r.prime);
      out.report["construction"] = "p-plus-one-preimages";
      json cover = json::array();
      for (const auto& s : r.cover) cover.push_back(subgroup_to_json(s));
      out.report["cover"] = cover;
      out.report["verification"] = cover_report_to_json(verification);
    } else {
      out.status = Status::refuted;
      out.report["no_cover"] = true;
      out.report["reason"] = "cyclic-group";
      if (r.nocover_generator) out.report["generator"] = element_to_json(*r.nocover_generator);
    }
    out.report["outcome"] = outcome_name(out.status);
    return out;
  }

  fail_input("Schema", "unknown group-cover action \"" + action + "\"");
}

RunResult run_lattice_verify(const json& cover_json, long box_radius) {
  auto [ambient, cosets] = parse_lattice_cover(cover_json);
  if (cosets.empty()) fail_input("Schema", "cover needs at least one coset");

  RunResult out;
  out.report = base_report("lattice-verify", "Theorem 4 (lattice covers)");

  bool all_full_rank = true;
  for (const auto& c : cosets)
    if (!c.lattice.full_rank()) all_full_rank = false;

  auto neumann = lattices::neumann_certificate(ambient, cosets, box_radius);
  if (const auto* cert = std::get_if<lattices::FiniteIndexCertificate>(&neumann))
    out.report["certificate"] = json{{"member_index", cert->member_index},
                                     {"index_value", int_to_json(cert->index_value)},
                                     {"label", "Lemma 1 (finite index member)"}};

  if (all_full_rank) {
    lattices::LatticeCoverReport r = lattices::verify_lattice_cover_exact(cosets);
    out.status = r.proper ? Status::ok : Status::refuted;
    out.report["method"] = "residue";
    out.report["outcome"] = outcome_name(out.status);
    out.report["report"] = lattice_report_to_json(r);
    return out;
  }

  // Exact residue reduction needs full rank everywhere; fall back to the
  // bounded box search, which can refute but never verify.
  out.report["method"] = "box-search";
  out.report["box_radius"] = box_radius;
  auto witness = lattices::refute_lattice_cover_search(ambient, cosets, box_radius);
  if (witness) {
    out.status = Status::refuted;
    out.report["outcome"] = outcome_name(out.status);
    out.report["report"] =
        json{{"covered", false},
             {"proper", false},
             {"witnesses", json{{"uncovered", vector_to_json(*witness)}}}};
  } else {
    out.status = Status::inconclusive;
    out.report["outcome"] = outcome_name(out.status);
    out.report["report"] = json{{"witnesses", json::object()}};
  }
  return out;
}

RunResult run_zx_verify(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) fail_input("Schema", "samples must be >= 1");
  RunResult out;
  out.report = base_report("zx-verify", "Remark (Z[x] subring cover)");
  out.report["samples"] = samples;
  out.report["seed"] = seed;

  bool ok = true;

  // Random membership: every polynomial lands in at least one part.
  {
    std::mt19937_64 rng(seed);
    bool all_covered = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::vector<Int> c(static_cast<std::size_t>(rand_below(rng, 9)) + 1);
      for (auto& x : c) x = rand_range(rng, -9, 9);
      witnesses::IntPolynomial f{std::move(c)};
      if (witnesses::zx_membership(f).empty()) {
        all_covered = false;
        out.report["membership_counterexample"] = f.to_string();
        break;
      }
    }
    out.report["membership"] = json{{"all_covered", all_covered}, {"samples", samples}};
    ok = ok && all_covered;
  }

  // Ring closure per part.
  {
    json closure = json::object();
    for (auto part : {witnesses::ZxPart::s1, witnesses::ZxPart::s2, witnesses::ZxPart::s3}) {
      auto r = witnesses::zx_closure_check(part, samples, seed);
      json pj{{"ok", r.ok}};
      if (!r.ok) {
        pj["failed_op"] = r.failed_op;
        pj["lhs"] = r.lhs->to_string();
        pj["rhs"] = r.rhs->to_string();
      }
      closure[witnesses::zx_part_name(part)] = pj;
      ok = ok && r.ok;
    }
    out.report["closure"] = closure;
  }

  // The three one-part witnesses.
  {
    const struct {
      const char* name;
      witnesses::IntPolynomial poly;
      witnesses::ZxPart expected;
    } fixed[] = {
        {"x", witnesses::IntPolynomial({Int(0), Int(1)}), witnesses::ZxPart::s1},
        {"x+1", witnesses::IntPolynomial({Int(1), Int(1)}), witnesses::ZxPart::s2},
        {"1", witnesses::IntPolynomial({Int(1)}), witnesses::ZxPart::s3},
    };
    json wj = json::object();
    for (const auto& f : fixed) {
      auto parts = witnesses::zx_membership(f.poly);
      json names = json::array();
      for (auto p : parts) names.push_back(witnesses::zx_part_name(p));
      wj[f.name] = names;
      ok = ok && parts.size() == 1 && parts.count(f.expected) == 1;
    }
    out.report["witnesses"] = wj;
  }

  out.status = ok ? Status::ok : Status::refuted;
  out.report["outcome"] = outcome_name(out.status);
  return out;
}

RunResult run_units_classify(const std::vector<std::string>& rationals) {
  if (rationals.empty()) fail_input("Schema", "at least one rational required");
  RunResult out;
  out.status = Status::ok;
  out.report = base_report("units-classify", "Theorem 4 (unit subsemigroups)");
  out.report["outcome"] = "ok";

  json results = json::array();
  for (const std::string& lit : rationals) {
    Rat q;
    try {
      q = Rat(lit);
    } catch (const std::exception&) {
      fail_input("Schema", "not a rational literal: " + lit);
    }
    if (q == 0) fail_input("ZeroInput", "0 is not a unit");
    auto e = witnesses::unit_exponents(q);
    json parts = json::array();
    for (auto p : witnesses::semigroup_membership(q)) parts.push_back(witnesses::unit_part_name(p));
    results.push_back(json{{"input", lit},
                           {"e1", int_to_json(e.e1)},
                           {"e2", int_to_json(e.e2)},
                           {"parts", parts}});
  }
  out.report["results"] = results;
  return out;
}

RunResult run_field_refute(const json& request_json) {
  witnesses::RefuteRequest req = parse_refute_request(request_json);

  RunResult out;
  out.report = base_report("field-refute", "Theorem 3 (coset cover refutation)");
  out.report["mode"] = req.mode == witnesses::CosetMode::additive ? "additive" : "multiplicative";
  out.report["p"] = req.subfield.p;
  out.report["k"] = req.subfield.k;
  out.report["degree_bound"] = req.degree_bound;

  auto outcome = witnesses::refute_coset_cover(req);
  if (outcome.certificate) {
    const bool reverified = witnesses::verify_refutation(req, *outcome.certificate);
    out.status = Status::refuted;
    json cj;
    if (const auto* w = std::get_if<witnesses::UncoveredWitness>(&*outcome.certificate)) {
      cj = json{{"kind", "uncovered_witness"},
                {"element", rf_to_json(w->element)},
                {"element_text", w->element.to_string()}};
    } else {
      const auto& col = std::get<witnesses::CollisionCertificate>(*outcome.certificate);
      cj = json{{"kind", "collision"},
                {"i", col.i},
                {"j", col.j},
                {"lambda1", rf_to_json(col.lambda1)},
                {"lambda2", rf_to_json(col.lambda2)},
                {"coset", col.coset_index}};
    }
    cj["reverified"] = reverified;
    out.report["certificate"] = cj;
    if (!reverified) out.status = Status::internal_error;
  } else {
    out.status = Status::inconclusive;
  }
  out.report["outcome"] = outcome_name(out.status);
  return out;
}

RunResult run_request(const json& request) {
  if (!request.is_object()) fail_input("Schema", "request must be a JSON object");
  const std::string command = require_field(request, "command").get<std::string>();

  const auto started = std::chrono::steady_clock::now();
  RunResult out;
  if (command == "descriptor-check") {
    out = run_descriptor_check(require_field(request, "predicate").get<std::string>(),
                               require_field(request, "descriptor"));
  } else if (command == "group-cover") {
    out = run_group_cover(require_field(request, "action").get<std::string>(),
                          require_field(request, "problem"));
  } else if (command == "lattice-verify") {
    long box = static_cast<long>(u64_field(request, "box", 4));
    out = run_lattice_verify(require_field(request, "cover"), box);
  } else if (command == "zx-verify") {
    out = run_zx_verify(u64_field(request, "samples", 10000), u64_field(request, "seed", 1));
  } else if (command == "units-classify") {
    const json& rj = require_field(request, "rationals");
    if (!rj.is_array()) fail_input("Schema", "rationals must be an array of strings");
    std::vector<std::string> rationals;
    for (const auto& v : rj) {
      if (!v.is_string()) fail_input("Schema", "rationals must be an array of strings");
      rationals.push_back(v.get<std::string>());
    }
    out = run_units_classify(rationals);
  } else if (command == "field-refute") {
    out = run_field_refute(require_field(request, "request"));
  } else {
    fail_input("Schema", "unknown command \"" + command + "\"");
  }

  // Timing is opt-in: default reports are byte-identical across runs.
  if (request.contains("timing") && request.at("timing").is_boolean() &&
      request.at("timing").get<bool>()) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    out.report["elapsed_ms"] = elapsed.count();
  }
  return out;
}

std::string render_json(const json& report) { return report.dump() + "\n"; }

namespace {

std::string vec_text(const json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out + ")";
}

}  // namespace

std::string render_text(const json& r) {
  std::string out;
  out += r.value("label", std::string("report")) + "\n";
  std::string outcome = r.value("outcome", std::string("?"));
  for (auto& ch : outcome) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  out += "outcome: " + outcome + "\n";

  const std::string command = r.value("command", std::string());
  if (r.contains("verdict")) {
    const auto& v = r.at("verdict");
    out += "value: " + std::string(v.at("value").get<bool>() ? "true" : "false") + "\n";
    out += "deciding clause: " + v.at("clause").get<std::string>() + "\n";
    out += "detail: " + v.at("detail").get<std::string>() + "\n";
  }
  if (r.contains("report")) {
    const auto& rep = r.at("report");
    if (rep.contains("covered"))
      out += std::string("covered: ") + (rep.at("covered").get<bool>() ? "yes" : "no") + "\n";
    if (rep.contains("proper"))
      out += std::string("proper: ") + (rep.at("proper").get<bool>() ? "yes" : "no") + "\n";
    if (rep.contains("modulus")) out += "residue modulus: " + rep.at("modulus").dump() + "\n";
    if (rep.contains("witnesses")) {
      const auto& w = rep.at("witnesses");
      if (w.contains("removal"))
        for (const auto& entry : w.at("removal"))
          out += "part " + entry.at("part").dump() + ": only cover of " +
                 vec_text(entry.at("witness")) + "\n";
      if (w.contains("uncovered"))
        out += "uncovered: " + vec_text(w.at("uncovered")) + "\n";
    }
  }
  if (r.contains("certificate")) {
    const auto& c = r.at("certificate");
    if (c.contains("member_index"))
      out += "finite-index certificate: member " + c.at("member_index").dump() + " has index " +
             c.at("index_value").dump() + "\n";
    if (c.contains("kind")) {
      out += "certificate: " + c.at("kind").get<std::string>();
      if (c.contains("element_text")) out += " " + c.at("element_text").get<std::string>();
      out += c.value("reverified", false) ? " (reverified)" : " (NOT reverified)";
      out += "\n";
    }
  }
  if (r.contains("k")) out += "minimal cover size: " + r.at("k").dump() + "\n";
  if (r.contains("p")) out += "prime: " + r.at("p").dump() + "\n";
  if (r.contains("no_cover")) out += "no cover exists: " + r.value("reason", std::string()) + "\n";
  if (r.contains("results"))
    for (const auto& entry : r.at("results"))
      out += entry.at("input").get<std::string>() + ": e = (" + entry.at("e1").dump() + ", " +
             entry.at("e2").dump() + "), parts " + entry.at("parts").dump() + "\n";
  if (r.contains("closure")) {
    for (const auto& [name, pj] : r.at("closure").items())
      out += name + " closure: " + (pj.at("ok").get<bool>() ? "ok" : "VIOLATION") + "\n";
  }
  if (command == "zx-verify" && r.contains("witnesses"))
    for (const auto& [name, parts] : r.at("witnesses").items())
      out += "witness " + name + " in " + parts.dump() + "\n";
  if (r.contains("elapsed_ms")) out += "elapsed_ms: " + r.at("elapsed_ms").dump() + "\n";
  return out;
}

}  // namespace coverlab::io
