#include "racah/sweep.hpp"

#include "racah/daha_modules.hpp"
#include "racah/module_engine.hpp"
#include "racah/racah_modules.hpp"

#include <chrono>
#include <stdexcept>

namespace racah {

std::vector<Rat> builtin_grid_values() {
  return {Rat(0),     Rat(1, 4), Rat(-1, 4), Rat(1, 2), Rat(-1, 2),
          Rat(1),     Rat(-1),   Rat(3, 2),  Rat(5, 2)};
}

namespace {

Json leonard_to_json(const LeonardReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["multiplicity_free"] = r.multiplicity_free;
  return j;
}

// Letter-wise / pair-wise / triple equivalences on an irreducible
// R_d(a,b,c): closed-form criterion vs diagonalizability vs
// multiplicity-freeness vs Leonard detection.
Json check_R(const ModuleSpec& spec, bool* ok) {
  Json detail;
  RacahRep rep = build_R(spec.d, spec.a, spec.b, spec.c);
  const MatQ* mats[3] = {&rep.A, &rep.B, &rep.C};
  const Letter letters[3] = {Letter::A, Letter::B, Letter::C};
  const char* names[3] = {"A", "B", "C"};
  bool mf[3];
  Json jletters = Json::array();
  for (int l = 0; l < 3; ++l) {
    DiagReport dr = diagonalizability(*mats[l]);
    bool crit = diag_criterion_R(letters[l], spec);
    mf[l] = dr.multiplicity_free;
    Json jl;
    jl["letter"] = names[l];
    jl["criterion"] = crit;
    jl["diagonalizable"] = dr.diagonalizable;
    jl["multiplicity_free"] = dr.multiplicity_free;
    jletters.push_back(jl);
    if (crit != dr.diagonalizable || dr.diagonalizable != dr.multiplicity_free)
      *ok = false;
  }
  detail["letters"] = jletters;

  const int pair_idx[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  Json jpairs = Json::array();
  for (int p = 0; p < 3; ++p) {
    int i = pair_idx[p][0], j = pair_idx[p][1];
    LeonardReport lr = leonard_pair_check(*mats[i], *mats[j]);
    Json jp;
    jp["pair"] = std::string(names[i]) + names[j];
    jp["leonard"] = leonard_to_json(lr);
    jpairs.push_back(jp);
    if (lr.verdict != (mf[i] && mf[j])) *ok = false;
  }
  detail["pairs"] = jpairs;

  LeonardReport lt = leonard_triple_check(*mats[0], *mats[1], *mats[2]);
  detail["triple"] = leonard_to_json(lt);
  if (lt.verdict != (mf[0] && mf[1] && mf[2])) *ok = false;
  return detail;
}

Json clauses_to_json(bool i, bool ii, bool iii, bool iv, const char* iv_name) {
  Json j;
  j["diag_on_module"] = i;
  j["diag_on_factors"] = ii;
  j["mf_on_factors"] = iii;
  j[iv_name] = iv;
  return j;
}

Json check_H(const ModuleSpec& spec, bool* ok) {
  EquivalenceReport er = verify_equivalences(spec);
  *ok = er.ok;
  Json detail;
  const char* lnames[3] = {"A", "B", "C"};
  Json jl = Json::array();
  for (int l = 0; l < 3; ++l) {
    Json e = clauses_to_json(er.letters[l].diag_on_module, er.letters[l].diag_on_factors,
                             er.letters[l].mf_on_factors, er.letters[l].criterion,
                             "criterion");
    e["letter"] = lnames[l];
    if (er.letters[l].degenerate) e["degenerate"] = true;
    jl.push_back(e);
  }
  detail["letters"] = jl;
  const char* pnames[3] = {"AB", "BC", "CA"};
  Json jp = Json::array();
  for (int p = 0; p < 3; ++p) {
    Json e = clauses_to_json(er.pairs[p].diag_on_module, er.pairs[p].diag_on_factors,
                             er.pairs[p].mf_on_factors, er.pairs[p].leonard_pairs,
                             "leonard_pairs");
    e["pair"] = pnames[p];
    jp.push_back(e);
  }
  detail["pairs"] = jp;
  detail["triple"] = clauses_to_json(er.triple.diag_on_module, er.triple.diag_on_factors,
                                     er.triple.mf_on_factors, er.triple.leonard_triples,
                                     "leonard_triples");
  Json dims = Json::array();
  for (Eigen::Index d : er.factor_dims) dims.push_back(static_cast<long>(d));
  detail["factor_dims"] = dims;
  detail["factors_match_prediction"] = er.factors_match_prediction;
  detail["prediction_completeness"] = er.prediction_completeness;
  if (!er.violations.empty()) detail["violations"] = er.violations;
  return detail;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  SweepResult out;
  Json records = Json::array();
  std::vector<std::string> failures;
  int total = 0, checked = 0, passed = 0;

  std::vector<std::array<Rat, 3>> triples = opts.triples;
  if (triples.empty()) {
    for (const Rat& a : opts.values)
      for (const Rat& b : opts.values)
        for (const Rat& c : opts.values) triples.push_back({a, b, c});
  }

  std::vector<ModuleSpec> specs;
  for (Family fam : opts.families) {
    for (int d = 0; d <= opts.d_max; ++d) {
      if (fam == Family::E && d % 2 == 0) continue;
      if (fam == Family::O && d % 2 != 0) continue;
      for (const auto& [a, b, c] : triples) {
        if (fam == Family::E) {
          for (const Twist tw : {Twist{1, 1}, Twist{1, -1}, Twist{-1, 1}, Twist{-1, -1}})
            specs.emplace_back(fam, d, a, b, c, tw);
        } else {
          specs.emplace_back(fam, d, a, b, c);
        }
      }
    }
  }

  for (const ModuleSpec& spec : specs) {
    ++total;
    Json rec;
    rec["spec"] = spec_to_json(spec);
    bool irr = spec.family == Family::R ? irr_criterion_R(spec) : irr_criterion_H(spec);
    rec["irreducible"] = irr;
    if (irr) {
      ++checked;
      bool ok = true;
      auto t0 = std::chrono::steady_clock::now();
      try {
        rec["detail"] = spec.family == Family::R ? check_R(spec, &ok) : check_H(spec, &ok);
        rec["ok"] = ok;
      } catch (const std::runtime_error& e) {
        if (std::string(e.what()) == "inconclusive") {
          rec["ok"] = false;
          rec["inconclusive"] = true;
          ++out.inconclusive;
          ok = false;
        } else {
          throw;
        }
      }
      if (opts.timings) {
        auto dt = std::chrono::steady_clock::now() - t0;
        rec["time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
      }
      if (ok)
        ++passed;
      else {
        ++out.failed;
        failures.push_back(spec.str());
      }
    }
    records.push_back(std::move(rec));
  }

  Json report;
  Json joptions;
  {
    std::string fams;
    for (Family f : opts.families) fams += (fams.empty() ? "" : ",") + family_name(f);
    joptions["families"] = fams;
    joptions["d_max"] = opts.d_max;
    joptions["specs"] = total;
  }
  report["options"] = joptions;
  report["records"] = std::move(records);
  Json summary;
  summary["total"] = total;
  summary["checked"] = checked;
  summary["passed"] = passed;
  summary["failed"] = out.failed;
  summary["inconclusive"] = out.inconclusive;
  summary["failures"] = failures;
  report["summary"] = std::move(summary);
  out.report = std::move(report);
  return out;
}

}  // namespace racah
