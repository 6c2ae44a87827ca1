#include "hypcover/serialize.hpp"

#include "hypcover/volume.hpp"

namespace hypcover {

using nlohmann::json;

namespace {

template <std::size_t Dim, class Tag>
json coords(const lorentz::Homogeneous<Dim, Tag>& x) {
  return json(x.coords());
}

}  // namespace

void to_json(json& j, const SchlafliParams& p) {
  j = json{{"u", p.u}, {"v", p.v}, {"w", p.w}};
}

void to_json(json& j, const Interval& i) { j = json::array({i.lo, i.hi}); }

void to_json(json& j, const EdgeReport& r) {
  j = json{{"edge", to_string(r.edge)}, {"covered", r.covered}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
}

void to_json(json& j, const OptimizerTrace& t) {
  j = json{{"method", t.method},
           {"grid_samples", t.grid_samples},
           {"feasible_samples", t.feasible_samples},
           {"iterations", t.iterations},
           {"bracket", {t.bracket_lo, t.bracket_hi}}};
}

void to_json(json& j, const DensityResult& r) {
  const auto& c = r.config;
  j = json{{"params", c.params},
           {"contact_edge", to_string(c.contact_edge)},
           {"t", c.t},
           {"h1", c.h1},
           {"h2", c.h2},
           {"density", r.density},
           {"volumes", {{"H1", r.vol_H1}, {"H2", r.vol_H2}, {"F", r.vol_F}}},
           {"feasible", c.feasible},
           {"per_edge", c.per_edge},
           {"optimizer_trace", r.optimizer_trace}};
}

void to_json(json& j, const FamilyResult& r) {
  j = json{{"u_star", r.u_star},
           {"extendable", r.extendable},
           {"outer_iterations", r.outer_iterations},
           {"result", r.best}};
}

json geometry_json(const TruncatedOrthoscheme& o) {
  const auto& p = o.params();
  json j;
  j["params"] = p;
  j["series"] = to_string(p.series);
  j["extendable"] = p.extendable;
  j["gram"] = {{"b", o.gram().b}, {"h", o.gram().h}, {"det", o.gram().det}};
  json principal = json::object();
  for (int i = 0; i < 4; ++i) principal["A" + std::to_string(i)] = coords(o.principal(i));
  j["principal"] = principal;
  json vertices = json::object();
  for (Vertex v : kAllVertices) vertices[to_string(v)] = coords(o.vertex(v));
  j["vertices"] = vertices;
  const auto& pl = o.placement();
  j["placement"] = {{"x", pl.x},   {"y", pl.y},   {"z0", pl.z0}, {"z1", pl.z1},
                    {"z2", pl.z2}, {"zH", pl.zH}, {"t1", pl.t1}, {"t2", pl.t2}};
  j["planes"] = {{"QEJ", coords(o.pi3())}, {"HLC", coords(o.pi0())}};
  const VolumeReport vr = volume_report(o);
  j["volume"] = {{"F", vr.orthoscheme_volume},
                 {"theta", vr.theta},
                 {"area_QEJ", vr.area_QEJ},
                 {"area_HLC", vr.area_HLC}};
  const EdgeLengths d = closed_form_distances(o.gram());
  j["lengths"] = {{"QE", d.QE}, {"QJ", d.QJ}, {"EA1", d.EA1}, {"QA2", d.QA2}, {"JH", d.JH}};
  return j;
}

}  // namespace hypcover

namespace hypcover::planar {

using nlohmann::json;

void to_json(json& j, const PlanarConfig& c) {
  auto pt = [](const ProjPoint3& x) { return json(x.coords()); };
  j = json{{"a", c.a},
           {"b", c.b},
           {"vertices",
            {{"O", pt(c.O)}, {"E", pt(c.E)}, {"D", pt(c.D)}, {"C", pt(c.C)}, {"F", pt(c.F)}}},
           {"J", pt(c.J)},
           {"len_OE", c.len_OE},
           {"len_FC", c.len_FC},
           {"h1", c.h1},
           {"h2", c.h2}};
}

void to_json(json& j, const ScanRow& r) {
  j = json{{"a", r.a},   {"b", r.b},         {"h1", r.h1},
           {"h2", r.h2}, {"pentagon_area", r.pentagon_area}, {"delta", r.delta},
           {"gap_to_limit", r.gap_to_limit}};
}

void to_json(json& j, const ScanReport& r) {
  j = json{{"rows", r.rows},
           {"strictly_decreasing", r.strictly_decreasing},
           {"all_above_limit", r.all_above_limit},
           {"terminal_gap", r.terminal_gap},
           {"limit", kLimitDensity}};
}

}  // namespace hypcover::planar
