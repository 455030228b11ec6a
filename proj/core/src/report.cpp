#include "vortex/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "vortex/errors.hpp"
#include "vortex/maps.hpp"
#include "vortex/metrics.hpp"

namespace vortex {

namespace {

using json = nlohmann::ordered_json;

struct Context {
  const ModelFile& file;
  const ReportOptions& opts;
  std::vector<std::string> warnings;
  std::vector<std::string> provenance;

  void cite(const std::string& s) {
    if (std::find(provenance.begin(), provenance.end(), s) == provenance.end()) provenance.push_back(s);
  }
  void warn(const std::string& s) {
    if (std::find(warnings.begin(), warnings.end(), s) == warnings.end()) warnings.push_back(s);
  }
};

json scalar(const PiPoly& p, const ReportOptions& opts) {
  json c = json::array();
  for (const auto& q : p.coeffs()) c.push_back(to_short_string(q));
  return {{"exact", p.to_string()}, {"coefficients", c}, {"approx", p.approx(opts.digits)}};
}

json scalars(const std::vector<PiPoly>& v, const ReportOptions& opts) {
  json out = json::array();
  for (const auto& p : v) out.push_back(scalar(p, opts));
  return out;
}

std::string fixed(double x, unsigned digits) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << x;
  return os.str();
}

std::vector<Rational> principal_slopes(const GlsmModel& m) {
  std::vector<Rational> out;
  for (const auto& p : m.principal) out.push_back(volume_and_slope(m.manifold, p).slope_vol);
  return out;
}

json model_summary(const ModelFile& f) {
  const auto& m = f.model;
  json tau = json::array();
  for (const auto& t : m.tau) tau.push_back(to_short_string(t));
  json bundles = json::array();
  for (const auto& b : line_bundles(m)) bundles.push_back(bundle_label(b));
  return {{"manifold", manifold_label(m.manifold)},
          {"complex_dimension", complex_dimension(m.manifold)},
          {"k", m.weights.k()},
          {"n", m.weights.n()},
          {"weights", m.weights.rows()},
          {"tau", tau},
          {"e2", to_short_string(1 / m.inv_e2)},
          {"bundles", bundles}};
}

json stability_section(Context& ctx) {
  const auto& m = ctx.file.model;
  const auto desc = build_moduli(m);
  json out;
  out["sigma"] = scalars(desc.sigma, ctx.opts);
  out["closed_cone"] = desc.closed_cone;
  out["interior"] = desc.interior;
  out["c1"] = desc.c1;
  out["c2"] = desc.c2;
  if (m.weights.n() == m.weights.k()) {
    if (desc.decomposition) {
      out["decomposition"] = {{"coefficients", scalars(desc.decomposition->coefficients, ctx.opts)},
                              {"i_plus", desc.decomposition->i_plus.to_string()},
                              {"i_zero", desc.decomposition->i_zero.to_string()}};
    } else {
      out["decomposition"] = nullptr;
    }
  }
  json th;
  try {
    const auto t = stability_threshold(m.weights, m.tau, volume(m.manifold), complex_dimension(m.manifold),
                                       principal_slopes(m), IndexSet::all(m.weights.n()));
    if (t.unbounded) {
      th["unbounded"] = true;
      th["note"] = "sigma stays interior for every e2";
    } else if (t.pi_u_star <= 0) {
      th["exists"] = false;
      th["reason"] = "sigma is not interior for any positive 1/e2";
    } else {
      th["unbounded"] = false;
      th["e2_min"] = scalar(t.e2_threshold(), ctx.opts);
      th["strict"] = true;
      th["note"] = "interior exactly when e2 exceeds e2_min; the source only asserts that large e2 suffices";
    }
  } catch (const NoThreshold& e) {
    th["exists"] = false;
    th["reason"] = e.what();
  }
  out["threshold"] = th;
  ctx.cite("cone criterion for solvability (Hitchin-Kobayashi correspondence)");
  return out;
}

json presentation_json(const ModuliDescription& d, const GlsmModel& m, const ReportOptions&) {
  json out;
  if (!d.cohomology) return nullptr;
  json gens = json::array();
  for (const auto& n : d.cohomology->odd_names()) gens.push_back(n);
  for (const auto& g : d.cohomology->even()) gens.push_back(g.name);
  out["generators"] = gens;
  if (d.cohomology->top_degree()) out["top_degree"] = *d.cohomology->top_degree();
  if (d.kind == ModuliKind::ProjectiveBundle) {
    const auto av = abelian_data(m.manifold, line_bundles(m)[0]);
    const auto c = transform_chern_class(av, m.weights.n());
    json cs = json::array();
    for (int k = 1; k <= d.fibre_rank; ++k) cs.push_back(c.graded(2 * k).to_string());
    out["relation"] = "eta^" + std::to_string(d.fibre_rank) + " = -sum_k c_k eta^(" + std::to_string(d.fibre_rank) + "-k)";
    out["chern_classes"] = cs;
  } else if (d.kind == ModuliKind::ProjectiveSpace) {
    out["relation"] = "eta^" + std::to_string(d.complex_dimension + 1) + " = 0";
  }
  return out;
}

json moduli_section(Context& ctx) {
  const auto& m = ctx.file.model;
  const auto d = build_moduli(m);
  json out;
  out["verdict"] = verdict_name(d.verdict);
  out["kind"] = kind_name(d.kind);
  if (d.verdict == Verdict::Stable) {
    out["complex_dimension"] = d.complex_dimension;
    out["smooth"] = d.smooth;
  }
  if (d.kind == ModuliKind::ProjectiveBundle) {
    out["fibre_rank"] = d.fibre_rank;
    out["base_dimension"] = d.base_dimension;
  } else if (d.kind == ModuliKind::ToricFibration) {
    out["fibre_dimension"] = d.fibre_dimension;
    out["base_dimension"] = d.base_dimension;
  }
  try {
    out["section_counts"] = section_counts(m);
  } catch (const UnsupportedError& e) {
    out["section_counts"] = nullptr;
    ctx.warn(std::string("section counts unavailable: ") + e.what());
  }
  if (d.verdict == Verdict::Stable) {
    const auto p = presentation_json(d, m, ctx.opts);
    if (!p.is_null()) out["cohomology"] = p;
  }
  out["notes"] = d.notes;
  switch (d.kind) {
    case ModuliKind::ProjectiveSpace:
      ctx.cite("moduli space as the projective space of sections");
      break;
    case ModuliKind::ProjectiveBundle:
      ctx.cite("moduli space as the projectivization of the Fourier-Mukai transform");
      break;
    case ModuliKind::ToricOrbifold:
    case ModuliKind::ToricFibration:
      ctx.cite("moduli space as a toric quotient of the space of sections");
      ctx.cite("dimension formula max over supports of D_I - d_I");
      break;
    default:
      break;
  }
  return out;
}

json kahler_section(Context& ctx) {
  const auto& m = ctx.file.model;
  const auto k = kahler_class(m);
  json out;
  out["eta_coefficients"] = scalars(k.eta_coefficients, ctx.opts);
  if (!k.base_correction.empty()) {
    json bc = json::array();
    for (const auto& b : k.base_correction) bc.push_back(b.to_string());
    out["base_correction"] = bc;
  }
  try {
    out["pipeline_agrees"] = kahler_class_pipeline(m) == k;
    ctx.cite("Kähler class by fibre integration of the universal curvature");
  } catch (const UnsupportedError&) {
    out["pipeline_agrees"] = nullptr;
  }
  return out;
}

json volume_section(Context& ctx) {
  const auto& m = ctx.file.model;
  const auto d = build_moduli(m);
  json out;
  const PiPoly vol = volume_moduli(m);
  out["kind"] = kind_name(d.kind);
  out["volume"] = scalar(vol, ctx.opts);
  if (d.kind == ModuliKind::ProjectiveSpace) {
    ctx.cite("volume (pi sigma)^D / D! of the projective moduli space");
    if (d.complex_dimension >= 1) {
      const PiPoly s = total_scalar_curvature(m);
      json sc;
      sc["exact"] = scalar(s, ctx.opts);
      if (d.complex_dimension >= 1 && d.complex_dimension + 1 >= 2) {
        const double alt = scalar_curvature_power_form(d.complex_dimension + 1, vol.to_double());
        sc["power_form"] = fixed(alt, ctx.opts.digits);
        sc["power_form_agrees"] = std::abs(s.to_double() / alt - 1) < 1e-9;
      }
      out["total_scalar_curvature"] = sc;
      ctx.cite("total scalar curvature from c1 of the moduli space");
    }
  } else if (d.kind == ModuliKind::ProjectiveBundle) {
    out["relation_ring_agrees"] = volume_moduli_relation_ring(m) == vol;
    ctx.cite("volume by Segre class push-forward over the dual torus");
  }
  if (ctx.file.constraint_degree) {
    json c;
    const long l = *ctx.file.constraint_degree;
    if (d.kind == ModuliKind::ProjectiveSpace && is_u1_unit_weights(m) && simply_connected(m.manifold)) {
      const BundleDescriptor bundle = line_bundles(m)[0];
      const long n = m.weights.n();
      const long r = r_sections(m.manifold, bundle);
      const long r_l = r_sections(m.manifold, combine_bundles({l}, {bundle}));
      c["degree"] = l;
      c["r"] = r;
      c["r_l"] = r_l;
      try {
        c["dimension"] = n * r - 1 - r_l;
        c["volume"] = scalar(constrained_volume(n, r, l, r_l, d.sigma[0]), ctx.opts);
        ctx.cite("volume of the constrained submanifold");
      } catch (const PreconditionError& e) {
        c["error"] = e.what();
      }
    } else {
      c["error"] = "constrained volumes need the U(1) model with unit weights on a simply connected base";
    }
    out["constraint"] = c;
  }
  return out;
}

json energy_section(Context& ctx) {
  const auto& m = ctx.file.model;
  if (m.weights.k() != 1) throw UnsupportedError("the energy is reported for a single circle factor only");
  json out;
  out["energy"] = scalar(vortex_energy(m), ctx.opts);
  const auto in = intersection_numbers(m.manifold, m.principal[0]);
  out["int_c1_omega"] = to_short_string(in.c1_omega);
  out["int_c1_squared"] = to_short_string(in.c1_squared);
  ctx.cite("vortex energy from the curvature class");
  return out;
}

json embedding_section(Context& ctx) {
  const auto& m = ctx.file.model;
  std::optional<ToricTarget> target;
  try {
    target.emplace(m.weights, m.tau);
  } catch (const PreconditionError& e) {
    throw UnsupportedError(std::string("the weights and tau do not define a smooth toric target: ") + e.what());
  }
  json out;
  json planes = json::array();
  for (const auto& p : unstable_planes(*target)) planes.push_back({{"allowed", p.allowed.to_string()}, {"dim", p.dim}});
  out["unstable_planes"] = planes;
  const auto data = section_data(*target, m.manifold, m.principal);
  const auto s = s_invariant(*target, m.manifold, data);
  out["s"] = s ? json(*s) : json("-inf");
  ctx.cite("unstable coordinate planes and the s-invariant");
  if (!std::holds_alternative<ProjectiveSpace>(m.manifold)) {
    out["open_dense"] = nullptr;
    out["note"] = "the open-dense criterion is established for projective-space bases only";
    return out;
  }
  const bool dense = embedding_open_dense(*target, m.manifold, data);
  out["open_dense"] = dense;
  ctx.cite("open-dense embedding criterion n - s > dim M");
  const auto* deg = std::get_if<Degree>(&m.principal[0]);
  if (target->is_projective_space() && deg && deg->d >= 0) {
    json mv;
    mv["conjectural"] = true;
    mv["degree"] = deg->d;
    try {
      mv["volume"] = scalar(maps_volume_conjectural(*target, m.manifold, deg->d, m.tau[0]), ctx.opts);
    } catch (const NotOpenDense& e) {
      mv["volume"] = nullptr;
      mv["reason"] = e.what();
    }
    out["maps_volume"] = mv;
    ctx.warn("embedding.maps_volume is conjectural: it assumes the map-space volume equals the strong-coupling limit");
  }
  return out;
}

json limit_section(Context& ctx) {
  const auto& m = ctx.file.model;
  const GlsmModel lim = strong_coupling(m);
  json out;
  out["conjectural"] = true;
  out["sigma"] = scalars(model_sigma(lim), ctx.opts);
  auto attempt = [&](const char* key, const std::function<json()>& f) {
    try {
      out[key] = f();
    } catch (const Error& e) {
      out[key] = {{"not_applicable", e.what()}};
    }
  };
  attempt("volume", [&] { return scalar(limit_volume(m), ctx.opts); });
  attempt("energy", [&] {
    if (m.weights.k() != 1) throw UnsupportedError("the energy is reported for a single circle factor only");
    return scalar(limit_energy(m), ctx.opts);
  });
  attempt("kahler_eta_coefficients", [&] { return scalars(limit_kahler_class(m).eta_coefficients, ctx.opts); });
  ctx.cite("strong-coupling limit 1/e2 -> 0");
  ctx.warn("limit values are exact substitutions; their reading as map-space quantities is conjectural");
  return out;
}

bool not_applicable(const Error& e) {
  return dynamic_cast<const NotStable*>(&e) || dynamic_cast<const UnsupportedError*>(&e);
}

}  // namespace

const std::vector<Section>& all_sections() {
  static const std::vector<Section> s = {Section::Stability, Section::Moduli, Section::Kahler, Section::Volume,
                                         Section::Energy, Section::Embedding, Section::Limit};
  return s;
}

const char* section_name(Section s) {
  switch (s) {
    case Section::Stability:
      return "stability";
    case Section::Moduli:
      return "moduli";
    case Section::Kahler:
      return "kahler";
    case Section::Volume:
      return "volume";
    case Section::Energy:
      return "energy";
    case Section::Embedding:
      return "embedding";
    case Section::Limit:
      return "limit";
  }
  return "?";
}

std::optional<Section> section_from_name(const std::string& name) {
  for (Section s : all_sections()) {
    if (name == section_name(s)) return s;
  }
  return std::nullopt;
}

bool Report::any_error() const {
  return std::any_of(statuses.begin(), statuses.end(), [](const SectionStatus& s) { return s.status == "error"; });
}

bool Report::all_ok() const {
  return std::all_of(statuses.begin(), statuses.end(), [](const SectionStatus& s) { return s.status == "ok"; });
}

Report build_report(const ModelFile& file, const std::vector<Section>& sections, const ReportOptions& opts) {
  Context ctx{file, opts, {}, {}};
  json root;
  root["model"] = model_summary(file);
  Report rep;
  for (Section s : sections) {
    json body;
    std::string status = "ok";
    try {
      switch (s) {
        case Section::Stability:
          body = stability_section(ctx);
          break;
        case Section::Moduli:
          body = moduli_section(ctx);
          break;
        case Section::Kahler:
          body = kahler_section(ctx);
          break;
        case Section::Volume:
          body = volume_section(ctx);
          break;
        case Section::Energy:
          body = energy_section(ctx);
          break;
        case Section::Embedding:
          body = embedding_section(ctx);
          break;
        case Section::Limit:
          body = limit_section(ctx);
          break;
      }
    } catch (const Error& e) {
      status = not_applicable(e) ? "not_applicable" : "error";
      body = {{"status", status}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    }
    root[section_name(s)] = body;
    rep.statuses.push_back({s, status});
  }
  root["warnings"] = ctx.warnings;
  root["provenance"] = ctx.provenance;
  rep.json = root.dump(2, ' ', false) + "\n";
  return rep;
}

std::string rerender_json(const std::string& report_json) { return json::parse(report_json).dump(2, ' ', false) + "\n"; }

namespace {

bool is_scalar_object(const json& j) { return j.is_object() && j.contains("exact") && j.contains("approx"); }

std::string leaf(const json& j) {
  if (is_scalar_object(j)) return j["exact"].get<std::string>() + "  (≈ " + j["approx"].get<std::string>() + ")";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "n/a";
  return j.dump();
}

bool inline_array(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number() || x.is_boolean(); });
}

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !is_scalar_object(j)) {
    for (const auto& [key, v] : j.items()) {
      if ((v.is_object() && !is_scalar_object(v)) || (v.is_array() && !inline_array(v) && !v.empty())) {
        os << pad << key << ":\n";
        render(v, indent + 2, os);
      } else if (v.is_array()) {
        os << pad << key << ": " << (v.empty() ? std::string("(none)") : v.dump()) << "\n";
      } else {
        os << pad << key << ": " << leaf(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if ((v.is_object() && !is_scalar_object(v)) || (v.is_array() && !inline_array(v))) {
        os << pad << "-\n";
        render(v, indent + 2, os);
      } else {
        os << pad << "- " << (inline_array(v) ? v.dump() : leaf(v)) << "\n";
      }
    }
  } else {
    os << pad << leaf(j) << "\n";
  }
}

}  // namespace

std::string render_text(const std::string& report_json) {
  const json j = json::parse(report_json);
  std::ostringstream os;
  for (const auto& [key, v] : j.items()) {
    os << "== " << key << " ==\n";
    if (v.is_array() && v.empty()) {
      os << "  (none)\n";
    } else {
      render(v, 2, os);
    }
  }
  return os.str();
}

}  // namespace vortex
