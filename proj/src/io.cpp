#include "alf/io.hpp"

#include <limits>

#include "alf/error.hpp"

namespace alf::io {

namespace {

std::string child(const std::string& at, std::string_view key) { return at + "/" + std::string(key); }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const Json& require_object(const Json& j, const std::string& at) {
  if (!j.is_object()) throw ParseError("expected an object", at);
  return j;
}

const Json& require_array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw ParseError("expected an array", at);
  return j;
}

std::string require_string(const Json& j, const std::string& at) {
  if (!j.is_string()) throw ParseError("expected a string", at);
  return j.get<std::string>();
}

long require_integer(const Json& j, const std::string& at) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
      throw ParseError("integer out of range", at);
    return static_cast<long>(v);
  }
  if (!j.is_number_integer()) throw ParseError("expected an integer", at);
  return j.get<long>();
}

void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& at) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unexpected key '" + key + "'", child(at, key));
  }
}

BaseSurface parse_base(const Json& j, const std::string& at) {
  require_object(j, at);
  reject_unknown_keys(j, {"kind", "n"}, at);
  if (!j.contains("kind")) throw ParseError("missing 'kind'", at);
  const std::string kind = require_string(j["kind"], child(at, "kind"));
  if (kind == "p2") {
    if (j.contains("n")) throw ParseError("the projective plane takes no index", child(at, "n"));
    return BaseSurface::projective_plane();
  }
  if (kind == "hirzebruch") {
    if (!j.contains("n")) throw ParseError("missing Hirzebruch index 'n'", at);
    const long n = require_integer(j["n"], child(at, "n"));
    if (n < 0 || n > std::numeric_limits<int>::max())
      throw ParseError("Hirzebruch index must be a non-negative integer", child(at, "n"));
    return BaseSurface::hirzebruch(static_cast<int>(n));
  }
  throw ParseError("unknown base kind '" + kind + "' (expected \"p2\" or \"hirzebruch\")", child(at, "kind"));
}

ClassSpec parse_class(const Json& j, const std::string& at) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name.empty()) throw ParseError("empty class name", at);
    return {{name, 1}};
  }
  if (!j.is_object()) throw ParseError("a class is a basis name or a coefficient map", at);
  ClassSpec spec;
  for (const auto& [name, value] : j.items()) {
    if (name.empty()) throw ParseError("empty basis name", at);
    spec.emplace_back(name, require_integer(value, child(at, name)));
  }
  return normalize_class_spec(std::move(spec));
}

CurveDeclaration parse_curve(const Json& j, const std::string& at) {
  require_object(j, at);
  reject_unknown_keys(j, {"id", "class", "step"}, at);
  if (!j.contains("id")) throw ParseError("missing 'id'", at);
  if (!j.contains("class")) throw ParseError("missing 'class'", at);
  CurveDeclaration c;
  c.id = require_string(j["id"], child(at, "id"));
  c.klass = parse_class(j["class"], child(at, "class"));
  if (j.contains("step")) {
    const long step = require_integer(j["step"], child(at, "step"));
    if (step < 0) throw ParseError("step must be non-negative", child(at, "step"));
    c.step = static_cast<std::size_t>(step);
  }
  return c;
}

BlowUpSpec parse_blowup(const Json& j, const std::string& at) {
  require_object(j, at);
  reject_unknown_keys(j, {"on", "fiber_label", "node"}, at);
  BlowUpSpec b;
  if (j.contains("on")) {
    const auto& on = require_array(j["on"], child(at, "on"));
    for (std::size_t i = 0; i < on.size(); ++i) b.on.push_back(require_string(on[i], child(child(at, "on"), i)));
  }
  if (j.contains("fiber_label")) b.fiber_label = require_string(j["fiber_label"], child(at, "fiber_label"));
  if (j.contains("node")) {
    if (!j["node"].is_boolean()) throw ParseError("expected a boolean", child(at, "node"));
    b.node = j["node"].get<bool>();
  }
  return b;
}

Json class_spec_json(const ClassSpec& spec) {
  if (spec.size() == 1 && spec[0].second == 1) return spec[0].first;
  Json out = Json::object();
  for (const auto& [name, coeff] : spec) out[name] = coeff;
  return out;
}

std::string source_kind(ConstraintSource::Kind k) {
  switch (k) {
    case ConstraintSource::Kind::Curve:
      return "curve";
    case ConstraintSource::Kind::BoxLower:
      return "box_lower";
    case ConstraintSource::Kind::BoxUpper:
      return "box_upper";
  }
  return "?";
}

Json pair_json(const LogPair& pair) {
  const auto& surface = pair.surface();
  Json base = Json::object();
  base["kind"] = surface.base().kind == BaseKind::ProjectivePlane ? "p2" : "hirzebruch";
  if (surface.base().kind == BaseKind::Hirzebruch) base["n"] = surface.base().n;
  Json boundary = Json::array();
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const auto& rec = pair.component(i);
    boundary.push_back({{"id", rec.id},
                        {"class", class_json(surface, rec.klass)},
                        {"self_intersection", to_fraction(rec.self_int)}});
  }
  return {{"base", base}, {"picard_rank", surface.rank()}, {"boundary", boundary}};
}

Json body_json(const LogPair& pair, const AmpleAngleBody& body) {
  Json constraints = Json::array();
  for (std::size_t i = 0; i < body.body.constraints().size(); ++i) {
    const auto& row = body.body.constraints()[i];
    const auto& src = body.provenance[i];
    Json source = {{"kind", source_kind(src.kind)}};
    if (src.kind == ConstraintSource::Kind::Curve) {
      source["curve"] = src.curve;
      source["class"] = class_json(pair.surface(), src.klass);
    } else {
      source["coordinate"] = src.coordinate + 1;
    }
    constraints.push_back({{"text", row.to_string()},
                           {"coefficients", vector_json(row.coefficients)},
                           {"constant", to_fraction(row.constant)},
                           {"strict", row.strict},
                           {"source", source}});
  }
  Json out = {{"dimension", body.dim()}, {"empty", body.empty}, {"constraints", constraints}};
  Json verts = Json::array();
  for (const auto& v : vertices(body.body)) verts.push_back(vector_json(v));
  out["closure_vertices"] = verts;
  const auto point = sample_point(body.body);
  out["sample_point"] = point ? vector_json(*point) : Json(nullptr);
  return out;
}

Json diagnostics_json(const LogPair& pair, const std::vector<Finding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings) {
    Json d = {{"kind", f.kind}, {"message", f.message}};
    d["curve"] = f.curve ? Json(*f.curve) : Json(nullptr);
    d["class"] = f.klass ? class_json(pair.surface(), *f.klass) : Json(nullptr);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PairDescription description_from_json(const Json& doc) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"base", "curves", "blowups", "boundary"}, "");
  if (!doc.contains("base")) throw ParseError("missing 'base'", "");
  PairDescription d;
  d.base = parse_base(doc["base"], "/base");
  if (doc.contains("curves")) {
    const auto& curves = require_array(doc["curves"], "/curves");
    for (std::size_t i = 0; i < curves.size(); ++i) d.curves.push_back(parse_curve(curves[i], child("/curves", i)));
  }
  if (doc.contains("blowups")) {
    const auto& blowups = require_array(doc["blowups"], "/blowups");
    for (std::size_t i = 0; i < blowups.size(); ++i)
      d.blowups.push_back(parse_blowup(blowups[i], child("/blowups", i)));
  }
  if (doc.contains("boundary")) {
    const auto& boundary = require_array(doc["boundary"], "/boundary");
    for (std::size_t i = 0; i < boundary.size(); ++i)
      d.boundary.push_back(require_string(boundary[i], child("/boundary", i)));
  }
  return d;
}

PairDescription parse_description(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "");
  }
  return description_from_json(doc);
}

Json description_to_json(const PairDescription& d) {
  Json base = Json::object();
  base["kind"] = d.base.kind == BaseKind::ProjectivePlane ? "p2" : "hirzebruch";
  if (d.base.kind == BaseKind::Hirzebruch) base["n"] = d.base.n;
  Json curves = Json::array();
  for (const auto& c : d.curves) {
    Json entry = {{"id", c.id}, {"class", class_spec_json(normalize_class_spec(c.klass))}};
    if (c.step != 0) entry["step"] = c.step;
    curves.push_back(std::move(entry));
  }
  Json blowups = Json::array();
  for (const auto& b : d.blowups) {
    Json entry = {{"on", b.on}};
    if (b.fiber_label) entry["fiber_label"] = *b.fiber_label;
    entry["node"] = b.node;
    blowups.push_back(std::move(entry));
  }
  return {{"base", base}, {"curves", curves}, {"blowups", blowups}, {"boundary", d.boundary}};
}

std::string emit_pair(const PairDescription& d) { return dump(description_to_json(d)); }

LogPair parse_pair(std::string_view text) {
  const PairDescription d = parse_description(text);
  try {
    return build_pair(d);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), e.location(), e.kind());
  }
}

Json class_json(const SurfaceModel& surface, const DivisorClass& d) {
  Json coeffs = Json::object();
  const auto names = surface.basis_names();
  for (std::size_t i = 0; i < names.size(); ++i) coeffs[names[i]] = to_fraction(d[i]);
  return {{"text", surface.format(d)}, {"coefficients", coeffs}};
}

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_fraction(x));
  return out;
}

Json aa_report(const LogPair& pair, const Verdict& verdict) {
  Json out = {{"schema", kReportSchema}, {"command", "aa"}, {"status", to_string(verdict.status)}};
  out["pair"] = pair_json(pair);
  out["ample_angles"] = body_json(pair, verdict.body);
  out["diagnostics"] = diagnostics_json(pair, verdict.diagnostics);
  return out;
}

Json classify_report(const LogPair& pair, const Verdict& verdict) {
  Json out = aa_report(pair, verdict);
  out["command"] = "classify";
  const ShapeReport shape = boundary_shape(pair);
  Json shape_json = {{"shape", to_string(shape.shape)}};
  shape_json["anticanonical"] = shape.anticanonical ? Json(*shape.anticanonical) : Json(nullptr);
  out["boundary_shape"] = shape_json;
  const Minimality m = is_minimal(pair);
  out["minimality"] = {{"minimal", m.minimal}, {"witness", m.witness ? Json(*m.witness) : Json(nullptr)}};
  return out;
}

Json verify_report(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"check", r.check}, {"subject", r.subject}, {"n", r.n}, {"passed", r.passed}, {"detail", r.detail}});
  return {{"schema", kReportSchema},
          {"command", "verify"},
          {"n_max", report.n_max},
          {"all_passed", report.all_passed()},
          {"rows", rows}};
}

Json error_report(const Error& e) {
  Json err = {{"kind", e.kind()}, {"location", e.location()}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e); p && !p->cause().empty()) err["cause"] = p->cause();
  return {{"schema", kReportSchema}, {"error", err}};
}

std::string dump(const Json& doc) { return doc.dump(2, ' ', false) + "\n"; }

}  // namespace alf::io
