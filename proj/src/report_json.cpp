#include "abdim/report_json.hpp"

namespace abdim {

std::string pclass_name(PClass c) {
  switch (c) {
    case PClass::MinusInfinity: return "minus_infinity";
    case PClass::Vanishes: return "vanishes";
    case PClass::UndeterminedAtLeast: return "undetermined_at_least";
  }
  return "?";
}

std::string perp_kind_name(PerpKind k) {
  switch (k) {
    case PerpKind::CertifiedYes: return "certified_yes";
    case PerpKind::WindowYes: return "window_yes";
    case PerpKind::No: return "no";
  }
  return "?";
}

std::string gkind_name(GKind k) {
  switch (k) {
    case GKind::Zero: return "zero";
    case GKind::MinusInfinity: return "minus_infinity";
    case GKind::Unknown: return "unknown";
  }
  return "?";
}

std::string abkind_name(ABKind k) {
  switch (k) {
    case ABKind::CertifiedZero: return "certified_zero";
    case ABKind::Unknown: return "unknown";
    case ABKind::MinusInfinity: return "minus_infinity";
  }
  return "?";
}

Json to_json(const ExtTable& t) {
  Json j;
  j["lo"] = t.lo;
  j["dims"] = t.dims;
  return j;
}

Json to_json(const FieldCtx& ctx, const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ctx.to_string(m.get(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PValue& v) {
  Json j;
  j["classification"] = pclass_name(v.cls);
  if (v.cls != PClass::MinusInfinity) j["value"] = v.value;
  j["period_certified"] = v.period_certified;
  j["tail_nonzero_certified"] = v.tail_nonzero_certified;
  j["evidence"] = to_json(v.evidence);
  return j;
}

Json to_json(const PerpVerdict& v) {
  Json j;
  j["verdict"] = perp_kind_name(v.kind);
  if (v.kind == PerpKind::No) {
    j["witness_index"] = v.witness_index;
    j["no_certified"] = v.no_certified;
  }
  j["evidence"] = to_json(v.evidence);
  return j;
}

Json to_json(const GdimVerdict& v) {
  Json j;
  j["verdict"] = gkind_name(v.kind);
  if (v.kind == GKind::MinusInfinity) return j;
  Json e;
  e["bidual_ok"] = v.evidence.bidual_ok;
  e["ext_m_vanishes"] = v.evidence.ext_m_vanishes;
  e["ext_m_certified"] = v.evidence.ext_m_certified;
  e["ext_dual_vanishes"] = v.evidence.ext_dual_vanishes;
  e["ext_dual_certified"] = v.evidence.ext_dual_certified;
  e["bound"] = v.evidence.bound;
  if (!v.evidence.failing.empty()) e["failing"] = v.evidence.failing;
  j["evidence"] = std::move(e);
  j["depth_formula"] = "depth R - depth M = 0";
  return j;
}

Json to_json(const ABdimVerdict& v) {
  Json j;
  j["verdict"] = abkind_name(v.kind);
  if (v.period) j["period"] = *v.period;
  j["rule"] = v.rule;
  j["gdim"] = to_json(v.gdim);
  Json samples = Json::array();
  for (const ABSample& s : v.samples) {
    Json e;
    e["name"] = s.name;
    e["in_perp"] = perp_kind_name(s.perp.kind);
    e["p_value"] = pclass_name(s.p.cls);
    if (s.p.cls != PClass::MinusInfinity) e["p"] = s.p.value;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const ArcReport& r) {
  Json j;
  j["self_ext_window_zero"] = r.self_ext_window_zero;
  j["free"] = r.free_module;
  j["consistent"] = r.consistent;
  j["syzygy_ext1"] = r.syzygy_ext1;
  j["expect_free"] = r.expect_free;
  j["self_ext"] = to_json(r.self_ext);
  return j;
}

Json to_json(const SpotReport& s) {
  Json j;
  j["index"] = s.index;
  j["composite_zero"] = s.composite_zero;
  j["ker_dim"] = s.ker_dim;
  j["im_dim"] = s.im_dim;
  j["exact"] = s.exact;
  j["dual_ker_dim"] = s.dual_ker_dim;
  j["dual_im_dim"] = s.dual_im_dim;
  j["dual_exact"] = s.dual_exact;
  return j;
}

Json to_json(const CompleteResolutionReport& r) {
  Json j;
  j["composites_zero"] = r.composites_zero;
  j["exact"] = r.exact;
  j["dual_exact"] = r.dual_exact;
  j["ok"] = r.ok();
  Json spots = Json::array();
  for (const SpotReport& s : r.spots) spots.push_back(to_json(s));
  j["spots"] = std::move(spots);
  return j;
}

Json to_json(const ExampleReport& r) {
  Json j;
  j["field"] = r.field;
  j["alpha"] = r.alpha;
  if (r.alpha_order)
    j["alpha_order"] = *r.alpha_order;
  else
    j["alpha_order"] = nullptr;
  Json ring;
  ring["dim"] = r.ring_dim;
  ring["socle_dim"] = r.socle_dim;
  ring["gorenstein"] = r.gorenstein;
  ring["nilpotency_degree"] = r.nilpotency_degree;
  j["ring"] = std::move(ring);
  Json cx;
  cx["periodic"] = r.complex_periodic;
  if (r.complex_periodic)
    cx["period"] = r.complex_period;
  else {
    cx["window_lo"] = r.window_lo;
    cx["window_hi"] = r.window_hi;
  }
  cx["verification"] = to_json(r.complex_report);
  j["complex"] = std::move(cx);
  Json mod;
  mod["kdim"] = r.module_kdim;
  mod["min_gens"] = r.module_min_gens;
  mod["betti"] = r.betti;
  if (r.period)
    mod["period"] = *r.period;
  else
    mod["period"] = nullptr;
  j["module"] = std::move(mod);
  j["total_reflexivity"] = to_json(r.reflexivity);
  j["ab_dimension"] = to_json(r.ab);
  j["arc"] = to_json(r.arc);
  Json samples = Json::array();
  for (const PerpSampleReport& s : r.perp_samples) {
    Json e;
    e["name"] = s.name;
    e["in_perp"] = to_json(s.perp);
    e["p_value"] = to_json(s.p);
    samples.push_back(std::move(e));
  }
  j["perp_samples"] = std::move(samples);
  return j;
}

Json to_json(const IsoVerdict& v, const FieldCtx& ctx) {
  Json j;
  switch (v.kind) {
    case IsoVerdict::Yes:
      j["verdict"] = "yes";
      j["witness"] = to_json(ctx, v.witness);
      break;
    case IsoVerdict::No:
      j["verdict"] = "no";
      j["reason"] = v.reason;
      break;
    case IsoVerdict::Unknown:
      j["verdict"] = "unknown";
      j["reason"] = v.reason;
      break;
  }
  return j;
}

}  // namespace abdim
