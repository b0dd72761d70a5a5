#include "legcob/obstruct.hpp"

#include "legcob/errors.hpp"
#include "legcob/planar.hpp"
#include "legcob/polys.hpp"

namespace legcob {

std::string status_name(Status s) {
  switch (s) {
    case Status::Consistent: return "Consistent";
    case Status::Violation: return "Violation";
    case Status::NonCollarable: return "NonCollarable";
  }
  return "?";
}

Verdict check_filling(const FillingClaim& c) {
  Verdict v;
  if (c.rot != 0) v.reasons.push_back("rot != 0");
  if (c.tb != 2 * c.genus - 1) v.reasons.push_back("tb != 2*g-1");
  if (c.slice_genus && c.genus != *c.slice_genus)
    v.reasons.push_back("g != g_s");
  if (c.tb_bound && c.tb != *c.tb_bound) v.reasons.push_back("tb != TB");
  v.status = v.reasons.empty() ? Status::Consistent : Status::Violation;
  return v;
}

Verdict collar_obstruction(const CollarScenario& s) {
  if (!s.concave_genus && !s.tb_bound)
    throw PreconditionError(
        "collar scenario needs a concave-side genus or a tb bound");
  Verdict v;
  if (s.concave_genus && *s.concave_genus != s.filling_genus)
    v.reasons.push_back("4-ball genus mismatch");
  const int need = 2 * s.filling_genus - 1;
  if (s.tb_bound && *s.tb_bound < need)
    v.reasons.push_back("tb bound " + std::to_string(*s.tb_bound) + " < " +
                        std::to_string(need) + " = 2*" +
                        std::to_string(s.filling_genus) + "-1");
  v.status = v.reasons.empty() ? Status::Consistent : Status::NonCollarable;
  return v;
}

DiskSliceReport certify_disk_slice(const QPFactorization& q,
                                   int crossing_cap) {
  DiskSliceReport rep;
  rep.surface = surface_data(q);
  if (!rep.surface.is_disk)
    throw PreconditionError("not a disk certificate");

  const BraidWord closure = qp_expand(q);
  const PD pd = braid_closure_pd(closure);
  rep.crossings = static_cast<int>(pd.x.size());
  rep.tb_bound = tb_upper_bound(pd, crossing_cap);

  CollarScenario sc;
  sc.filling_genus = 0;
  sc.tb_bound = rep.tb_bound;
  rep.verdict = collar_obstruction(sc);

  rep.lines.emplace_back("ASSUMPTION", "filling surface oriented");
  rep.lines.emplace_back("STRANDS", std::to_string(rep.surface.strands));
  rep.lines.emplace_back("BANDS", std::to_string(rep.surface.bands));
  rep.lines.emplace_back("CHI", std::to_string(rep.surface.chi));
  rep.lines.emplace_back("EXPONENT_SUM",
                         std::to_string(rep.surface.exponent_sum));
  rep.lines.emplace_back("SELF_LINKING",
                         std::to_string(rep.surface.self_linking));
  rep.lines.emplace_back("IS_DISK", "1");
  rep.lines.emplace_back("CROSSINGS", std::to_string(rep.crossings));
  rep.lines.emplace_back("TB_BOUND", std::to_string(rep.tb_bound));
  rep.lines.emplace_back("FILLING_GENUS", "0");
  rep.lines.emplace_back("STATUS", status_name(rep.verdict.status));
  for (const std::string& r : rep.verdict.reasons)
    rep.lines.emplace_back("REASON", r);
  return rep;
}

}  // namespace legcob
