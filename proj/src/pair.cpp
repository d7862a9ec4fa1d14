#include "alf/pair.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "alf/error.hpp"

namespace alf {

namespace {

// Basis order: H/Z first, F second, then E1, E2, ...; unknown names sort last.
std::pair<int, std::string> basis_key(const std::string& name) {
  if (name == "H" || name == "Z") return {0, ""};
  if (name == "F") return {1, ""};
  if (name.size() > 1 && name[0] == 'E' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() < 10)
    return {2 + std::stoi(name.substr(1)), ""};
  return {1 << 30, name};
}

template <typename Fn>
void at_location(const std::string& location, Fn&& fn) {
  try {
    fn();
  } catch (Error& e) {
    if (e.location().empty()) e.set_location(location);
    throw;
  }
}

}  // namespace

ClassSpec normalize_class_spec(ClassSpec spec) {
  std::map<std::pair<int, std::string>, std::pair<std::string, long>> merged;
  for (auto& [name, coeff] : spec) {
    auto& slot = merged[basis_key(name)];
    slot.first = name;
    slot.second += coeff;
  }
  ClassSpec out;
  for (auto& [key, term] : merged)
    if (term.second != 0) out.push_back(term);
  return out;
}

DivisorClass resolve_class_spec(const SurfaceModel& surface, const ClassSpec& spec) {
  DivisorClass d = DivisorClass::zero(surface.rank());
  for (const auto& [name, coeff] : spec) {
    const auto index = surface.basis_index(name);
    if (!index)
      throw UnknownCurve("basis class '" + name + "' does not exist after " + std::to_string(surface.blowup_count()) +
                         " blow-up(s)");
    d[*index] += coeff;
  }
  return d;
}

std::vector<DivisorClass> LogPair::boundary_classes() const {
  std::vector<DivisorClass> out;
  for (const auto& id : boundary_) out.push_back(catalog_.at(id).klass);
  return out;
}

DivisorClass LogPair::boundary_sum() const {
  DivisorClass sum = DivisorClass::zero(surface_.rank());
  for (const auto& d : boundary_classes()) sum += d;
  return sum;
}

bool LogPair::in_boundary(std::string_view id) const {
  const auto* rec = catalog_.find(id);
  return rec && std::find(boundary_.begin(), boundary_.end(), rec->id) != boundary_.end();
}

LogPair build_pair(const PairDescription& description) {
  SurfaceModel surface(description.base);
  if (description.base.kind == BaseKind::Hirzebruch && description.base.n < 0)
    throw PreconditionError("Hirzebruch index must be non-negative", "/base/n");
  CurveCatalog catalog = CurveCatalog::for_base(surface);

  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < description.boundary.size(); ++i)
      if (!seen.insert(description.boundary[i]).second)
        throw PreconditionError("boundary lists '" + description.boundary[i] + "' twice",
                                "/boundary/" + std::to_string(i));
  }
  for (std::size_t i = 0; i < description.curves.size(); ++i)
    if (description.curves[i].step > description.blowups.size())
      throw PreconditionError("curve declared after blow-up " + std::to_string(description.curves[i].step) +
                                  " but only " + std::to_string(description.blowups.size()) + " exist",
                              "/curves/" + std::to_string(i) + "/step");

  const std::size_t steps = description.blowups.size();
  for (std::size_t step = 0; step <= steps; ++step) {
    for (std::size_t i = 0; i < description.curves.size(); ++i) {
      const auto& decl = description.curves[i];
      if (decl.step != step) continue;
      at_location("/curves/" + std::to_string(i), [&] {
        catalog.declare(surface, decl.id, resolve_class_spec(surface, decl.klass));
      });
    }
    catalog.mark_boundary(description.boundary);
    if (step == steps) break;
    at_location("/blowups/" + std::to_string(step), [&] {
      auto result = blow_up(surface, catalog, description.blowups[step]);
      surface = std::move(result.surface);
      catalog = std::move(result.catalog);
    });
  }
  catalog.mark_boundary(description.boundary);

  LogPair pair(std::move(surface), std::move(catalog), description);
  std::set<std::string> records_used;
  for (std::size_t i = 0; i < description.boundary.size(); ++i) {
    at_location("/boundary/" + std::to_string(i), [&] {
      const auto& rec = pair.catalog_.at(description.boundary[i]);
      if (rec.generic)
        throw PreconditionError("boundary component '" + description.boundary[i] +
                                "' is a general pencil member; declare it as a curve");
      if (!records_used.insert(rec.id).second)
        throw PreconditionError("boundary names the curve '" + rec.id + "' twice");
      pair.boundary_.push_back(rec.id);
    });
  }
  return pair;
}

}  // namespace alf
