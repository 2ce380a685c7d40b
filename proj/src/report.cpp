#include "deon/report.hpp"

#include <sstream>

namespace deon {

namespace {

std::string set_text(const std::set<World>& s) {
  std::string out = "{";
  bool first = true;
  for (World w : s) {
    if (!first) out += ",";
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

nlohmann::ordered_json set_json(const std::set<World>& s) { return nlohmann::ordered_json(std::vector<World>(s.begin(), s.end())); }

std::string query_text(const Query& q) {
  return q.kind == QueryKind::Consistent ? "consistent?" : "entails? " + print(*q.goal);
}

std::string method_text(const Certificate& c) {
  std::string s(to_string(c.method));
  if (c.via) s += " via " + std::string(to_string(*c.via));
  return s;
}

}  // namespace

std::vector<std::string> render_model(const Model& m) {
  std::vector<std::string> out;
  if (const auto* k = std::get_if<KripkeModel>(&m)) {
    out.push_back("Kripke model, " + std::to_string(k->world_count) + " world(s), current world " +
                  std::to_string(k->current_world));
    for (World w = 0; w < k->world_count; ++w) out.push_back("  R(" + std::to_string(w) + ") = " + set_text(k->successors[w]));
    for (const auto& [atom, worlds] : k->valuation) out.push_back("  V(" + atom + ") = " + set_text(worlds));
    return out;
  }
  const auto& c = std::get<CJModel>(m);
  out.push_back("CJ model, " + std::to_string(c.world_count) + " world(s), current world " +
                std::to_string(c.current_world));
  for (std::uint32_t x = 0; x < c.subset_count(); ++x) {
    auto fam = c.ob_family(WorldSet(x));
    if (fam.empty()) continue;
    std::string line = "  ob(" + WorldSet(x).to_string() + ") = {";
    for (std::size_t i = 0; i < fam.size(); ++i) line += (i ? ", " : "") + fam[i].to_string();
    out.push_back(line + "}");
  }
  for (const auto& [atom, ext] : c.valuation) out.push_back("  V(" + atom + ") = " + ext.to_string());
  return out;
}

nlohmann::ordered_json model_json(const Model& m) {
  nlohmann::ordered_json j;
  if (const auto* k = std::get_if<KripkeModel>(&m)) {
    j["type"] = "kripke";
    j["worlds"] = k->world_count;
    j["current_world"] = k->current_world;
    auto rel = nlohmann::ordered_json::array();
    for (const auto& succ : k->successors) rel.push_back(set_json(succ));
    j["relation"] = rel;
    auto val = nlohmann::ordered_json::object();
    for (const auto& [atom, worlds] : k->valuation) val[atom] = set_json(worlds);
    j["valuation"] = val;
    return j;
  }
  const auto& c = std::get<CJModel>(m);
  j["type"] = "cj";
  j["worlds"] = c.world_count;
  j["current_world"] = c.current_world;
  auto ob = nlohmann::ordered_json::array();
  for (std::uint32_t x = 0; x < c.subset_count(); ++x) {
    auto fam = c.ob_family(WorldSet(x));
    if (fam.empty()) continue;
    nlohmann::ordered_json entry;
    entry["context"] = WorldSet(x).members();
    auto members = nlohmann::ordered_json::array();
    for (const auto& y : fam) members.push_back(y.members());
    entry["obligatory"] = members;
    ob.push_back(entry);
  }
  j["ob"] = ob;
  auto val = nlohmann::ordered_json::object();
  for (const auto& [atom, ext] : c.valuation) val[atom] = ext.members();
  j["valuation"] = val;
  return j;
}

nlohmann::ordered_json report_json(const RunReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["tool"] = "deon";
  j["version"] = r.tool_version;
  j["scenario"] = r.scenario;
  j["logic"] = std::string(to_string(r.logic));
  auto qs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    const Query& q = r.queries[i];
    const Verdict& v = r.verdicts[i];
    nlohmann::ordered_json e;
    e["id"] = v.query_id;
    e["kind"] = q.kind == QueryKind::Consistent ? "consistent" : "entails";
    if (q.goal) e["goal"] = print(*q.goal);
    e["verdict"] = std::string(to_string(v.kind));
    nlohmann::ordered_json cert;
    cert["method"] = std::string(to_string(v.certificate.method));
    if (v.certificate.via) cert["via"] = std::string(to_string(*v.certificate.via));
    cert["steps"] = v.certificate.lines();
    e["certificate"] = cert;
    if (v.model) e["model"] = model_json(*v.model);
    if (v.bound) e["bound"] = *v.bound;
    if (!v.limit.empty()) e["limit"] = v.limit;
    if (with_timings) e["elapsed_us"] = v.elapsed.count();
    qs.push_back(e);
  }
  j["queries"] = qs;
  if (with_timings) j["wall_time_us"] = r.wall_time.count();
  return j;
}

std::string report_text(const RunReport& r, bool with_timings) {
  std::ostringstream os;
  os << "scenario " << r.scenario << " (logic " << to_string(r.logic) << ")\n";
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    const Query& q = r.queries[i];
    const Verdict& v = r.verdicts[i];
    os << v.query_id << ": " << query_text(q) << "  =>  " << to_string(v.kind) << " [" << method_text(v.certificate);
    if (v.kind == VerdictKind::Unknown && v.limit.empty() && v.bound) os << ", no model up to " << *v.bound << " worlds";
    os << "]";
    if (with_timings) os << "  (" << v.elapsed.count() << " us)";
    os << '\n';
    if (!v.limit.empty()) os << "  limit: " << v.limit << '\n';
    if (v.certificate.method != Method::Inconsistency) {
      for (const auto& line : v.certificate.lines()) os << "  " << line << '\n';
    }
    if (v.model) {
      for (const auto& line : render_model(*v.model)) os << "  " << line << '\n';
    }
  }
  if (with_timings) os << "total " << r.wall_time.count() << " us\n";
  return os.str();
}

}  // namespace deon
