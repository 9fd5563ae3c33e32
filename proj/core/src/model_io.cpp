#include "awarekit/model_io.hpp"

#include <fstream>
#include <sstream>

#include "awarekit/error.hpp"
#include "awarekit/parser.hpp"
#include "json.hpp"

namespace awarekit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error("BadModelFile", msg); }

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) bad("unknown key '" + k + "' in " + where);
  }
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

LanguageSlice slice(const json& j, const std::string& where) {
  only_keys(j, {"predicates", "concepts"}, where);
  LanguageSlice s;
  if (j.contains("predicates")) {
    for (auto& p : strings(j["predicates"], where + ".predicates")) s.predicates.insert(p);
  }
  if (j.contains("concepts")) {
    for (auto& c : strings(j["concepts"], where + ".concepts")) s.concepts.insert(c);
  }
  return s;
}

int agent_key(const std::string& k, int agents, const std::string& where) {
  int a = 0;
  try {
    std::size_t used = 0;
    a = std::stoi(k, &used);
    if (used != k.size()) a = 0;
  } catch (const std::exception&) {
    a = 0;
  }
  if (a < 1 || a > agents) bad("bad agent key '" + k + "' in " + where);
  return a;
}

json slice_json(const LanguageSlice& s) {
  return json{{"predicates", std::vector<std::string>(s.predicates.begin(), s.predicates.end())},
              {"concepts", std::vector<std::string>(s.concepts.begin(), s.concepts.end())}};
}

}  // namespace

Model model_from_json(std::string_view text, const LoadOptions& options) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  only_keys(j,
            {"agents", "objects", "predicates", "concepts", "states", "language", "awareness",
             "partitions", "extensions", "concept_defs", "utilities", "endowments"},
            "model");
  Model m;
  const json& agents = need(j, "agents", "model");
  if (!agents.is_number_integer()) bad("agents must be an integer");
  m.sig.agents = agents.get<int>();
  m.sig.objects = strings(need(j, "objects", "model"), "objects");
  m.sig.predicates = strings(need(j, "predicates", "model"), "predicates");
  m.sig.concepts = j.contains("concepts") ? strings(j["concepts"], "concepts") : std::vector<std::string>{};
  m.sig.validate();
  m.states = strings(need(j, "states", "model"), "states");
  const std::size_t n = m.states.size();
  auto state_of = [&](const std::string& s, const std::string& where) {
    for (std::size_t w = 0; w < n; ++w) {
      if (m.states[w] == s) return w;
    }
    bad("unknown state '" + s + "' in " + where);
  };

  m.language.assign(n, {});
  const json& lang = need(j, "language", "model");
  if (!lang.is_object()) bad("language must be an object");
  for (const auto& [s, v] : lang.items()) m.language[state_of(s, "language")] = slice(v, "language." + s);
  if (lang.size() != n) bad("language must list every state");

  const int na = m.sig.agents;
  if (na < 1) bad("agents must be positive");
  m.awareness.assign(static_cast<std::size_t>(na), std::vector<LanguageSlice>(n));
  const json& aw = need(j, "awareness", "model");
  if (!aw.is_object() || aw.size() != static_cast<std::size_t>(na)) bad("awareness must list every agent");
  for (const auto& [a, per_state] : aw.items()) {
    int i = agent_key(a, na, "awareness");
    if (!per_state.is_object() || per_state.size() != n) bad("awareness." + a + " must list every state");
    for (const auto& [s, v] : per_state.items()) {
      m.awareness[i - 1][state_of(s, "awareness")] = slice(v, "awareness." + a + "." + s);
    }
  }

  m.partitions.assign(static_cast<std::size_t>(na), {});
  const json& parts = need(j, "partitions", "model");
  if (!parts.is_object() || parts.size() != static_cast<std::size_t>(na)) bad("partitions must list every agent");
  for (const auto& [a, cells] : parts.items()) {
    int i = agent_key(a, na, "partitions");
    if (!cells.is_array()) bad("partitions." + a + " must be an array of arrays");
    for (const auto& c : cells) {
      std::vector<StateId> cell;
      for (auto& s : strings(c, "partitions." + a)) cell.push_back(state_of(s, "partitions"));
      m.partitions[i - 1].push_back(std::move(cell));
    }
  }

  m.extensions.assign(n, {});
  const json& ext = need(j, "extensions", "model");
  if (!ext.is_object()) bad("extensions must be an object");
  for (const auto& [s, per_pred] : ext.items()) {
    StateId w = state_of(s, "extensions");
    if (!per_pred.is_object()) bad("extensions." + s + " must be an object");
    for (const auto& [p, objs] : per_pred.items()) {
      auto list = strings(objs, "extensions." + s + "." + p);
      m.extensions[w][p] = std::set<std::string>(list.begin(), list.end());
    }
  }

  m.concept_defs.assign(n, {});
  if (j.contains("concept_defs")) {
    const json& defs = j["concept_defs"];
    if (!defs.is_object()) bad("concept_defs must be an object");
    for (const auto& [s, per_concept] : defs.items()) {
      StateId w = state_of(s, "concept_defs");
      if (!per_concept.is_object()) bad("concept_defs." + s + " must be an object");
      for (const auto& [c, text] : per_concept.items()) {
        if (!text.is_string()) bad("concept_defs." + s + "." + c + " must be a string");
        Formula tmpl = parse_combination(text.get<std::string>(), m.sig);
        m.concept_defs[w].emplace(c, BooleanConcept::from_template(tmpl));
      }
    }
  }

  const bool has_u = j.contains("utilities");
  const bool has_e = j.contains("endowments");
  if (has_u != has_e) bad("utilities and endowments must be given together");
  if (has_u) {
    if (na != 2) bad("utilities need exactly two agents");
    Economy e;
    e.utilities.assign(2, std::vector<std::vector<Rational>>(
                              n, std::vector<Rational>(m.sig.objects.size())));
    std::vector<std::vector<std::vector<bool>>> seen(
        2, std::vector<std::vector<bool>>(n, std::vector<bool>(m.sig.objects.size(), false)));
    const json& u = j["utilities"];
    if (!u.is_object()) bad("utilities must be an object");
    for (const auto& [a, per_state] : u.items()) {
      int i = agent_key(a, 2, "utilities");
      if (!per_state.is_object()) bad("utilities." + a + " must be an object");
      for (const auto& [s, per_obj] : per_state.items()) {
        StateId w = state_of(s, "utilities");
        if (!per_obj.is_object()) bad("utilities." + a + "." + s + " must be an object");
        for (const auto& [d, val] : per_obj.items()) {
          if (!m.sig.is_object(d)) bad("unknown object '" + d + "' in utilities");
          std::size_t k = m.sig.object_index(d);
          if (val.is_string()) {
            e.utilities[i - 1][w][k] = parse_rational(val.get<std::string>());
          } else if (val.is_number_integer()) {
            e.utilities[i - 1][w][k] = Rational(val.get<long long>());
          } else {
            throw Error("BadRational", "utilities." + a + "." + s + "." + d);
          }
          seen[i - 1][w][k] = true;
        }
      }
    }
    for (int i = 0; i < 2; ++i) {
      for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t k = 0; k < m.sig.objects.size(); ++k) {
          if (!seen[i][w][k]) {
            throw Error("BadEconomy", "missing utility for agent " + std::to_string(i + 1) + " at " +
                                          m.states[w] + " of " + m.sig.objects[k]);
          }
        }
      }
    }
    const json& en = j["endowments"];
    only_keys(en, {"1", "2"}, "endowments");
    e.endow1 = strings(need(en, "1", "endowments"), "endowments.1");
    e.endow2 = strings(need(en, "2", "endowments"), "endowments.2");
    std::sort(e.endow1.begin(), e.endow1.end());
    std::sort(e.endow2.begin(), e.endow2.end());
    m.economy = std::move(e);
  }

  m.finalize(options.require_constancy);
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load_model(const std::filesystem::path& path, const LoadOptions& options) {
  return model_from_json(read_file(path), options);
}

std::string model_to_json(const Model& m) {
  json j;
  j["agents"] = m.sig.agents;
  j["objects"] = m.sig.objects;
  j["predicates"] = m.sig.predicates;
  j["concepts"] = m.sig.concepts;
  j["states"] = m.states;
  json lang = json::object();
  json ext = json::object();
  json defs = json::object();
  for (StateId w = 0; w < m.num_states(); ++w) {
    lang[m.states[w]] = slice_json(m.language[w]);
    json e = json::object();
    for (const auto& [p, objs] : m.extensions[w]) {
      std::vector<std::string> ordered;
      for (const auto& d : m.sig.objects) {
        if (objs.contains(d)) ordered.push_back(d);
      }
      e[p] = ordered;
    }
    ext[m.states[w]] = e;
    json d = json::object();
    for (const auto& [c, def] : m.concept_defs[w]) d[c] = def.to_text();
    defs[m.states[w]] = d;
  }
  j["language"] = lang;
  j["extensions"] = ext;
  j["concept_defs"] = defs;
  json aw = json::object();
  json parts = json::object();
  for (int i = 1; i <= m.sig.agents; ++i) {
    json per_state = json::object();
    for (StateId w = 0; w < m.num_states(); ++w) per_state[m.states[w]] = slice_json(m.aware(i, w));
    aw[std::to_string(i)] = per_state;
    json cells = json::array();
    for (const auto& c : m.partitions[i - 1]) {
      json cell = json::array();
      for (StateId w : c) cell.push_back(m.states[w]);
      cells.push_back(cell);
    }
    parts[std::to_string(i)] = cells;
  }
  j["awareness"] = aw;
  j["partitions"] = parts;
  if (m.economy) {
    json u = json::object();
    for (int i = 1; i <= 2; ++i) {
      json per_state = json::object();
      for (StateId w = 0; w < m.num_states(); ++w) {
        json per_obj = json::object();
        for (std::size_t k = 0; k < m.sig.objects.size(); ++k) {
          per_obj[m.sig.objects[k]] = to_string(m.economy->utilities[i - 1][w][k]);
        }
        per_state[m.states[w]] = per_obj;
      }
      u[std::to_string(i)] = per_state;
    }
    j["utilities"] = u;
    j["endowments"] = json{{"1", m.economy->endow1}, {"2", m.economy->endow2}};
  }
  return j.dump(2) + "\n";
}

}  // namespace awarekit
