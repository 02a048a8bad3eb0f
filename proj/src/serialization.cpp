#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "autocomplexity/automata.hpp"
#include "autocomplexity/errors.hpp"

namespace autocomplexity {

using ordered_json = nlohmann::ordered_json;

std::string to_dot(const Nfa& m, std::size_t pair_second_size) {
  auto label = [&](Symbol s) {
    if (pair_second_size == 0) return std::to_string(s);
    return "(" + std::to_string(s / pair_second_size) + "," +
           std::to_string(s % pair_second_size) + ")";
  };
  std::map<std::pair<State, State>, std::string> arrows;
  for (const Edge& e : m.edges()) {
    auto& text = arrows[{e.from, e.to}];
    if (!text.empty()) text += ",";
    text += label(e.label);
  }
  std::ostringstream out;
  out << "digraph nfa {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  start [shape=point];\n";
  for (State q = 0; q < m.state_count(); ++q) {
    out << "  q" << q << " [shape=" << (m.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  start -> q" << m.start() << ";\n";
  for (const auto& [ends, text] : arrows) {
    out << "  q" << ends.first << " -> q" << ends.second << " [label=\"" << text << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const WitnessCertificate& c) {
  ordered_json j;
  j["kind"] = to_string(c.kind);
  j["target"] = std::vector<Symbol>(c.target.symbols().begin(), c.target.symbols().end());
  if (c.condition) {
    j["condition"] =
        std::vector<Symbol>(c.condition->symbols().begin(), c.condition->symbols().end());
  }
  ordered_json alphabet;
  alphabet["target_size"] = c.target.alphabet_size();
  if (c.condition) alphabet["condition_size"] = c.condition->alphabet_size();
  j["alphabet"] = alphabet;
  ordered_json nfa;
  nfa["states"] = c.nfa.state_count();
  nfa["start"] = c.nfa.start();
  nfa["accepts"] = std::vector<State>(c.nfa.accepts().begin(), c.nfa.accepts().end());
  ordered_json edges = ordered_json::array();
  for (const Edge& e : c.nfa.edges()) edges.push_back({e.from, e.label, e.to});
  nfa["edges"] = edges;
  j["nfa"] = nfa;
  j["claimed_states"] = c.claimed_states;
  return j.dump(2) + "\n";
}

namespace {

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError("expected an object at " + path);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field " + path + "/" + key);
  return *it;
}

std::uint64_t natural(const ordered_json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError("expected a non-negative integer at " + path);
  }
  return v.get<std::uint64_t>();
}

std::vector<Symbol> symbols(const ordered_json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError("expected an array at " + path);
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<Symbol>(natural(v[i], path + "/" + std::to_string(i))));
  }
  return out;
}

Word word_at(const ordered_json& v, std::size_t alphabet, const std::string& path) {
  try {
    return Word(symbols(v, path), alphabet);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " at " + path);
  }
}

}  // namespace

WitnessCertificate from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  WitnessCertificate c;
  const auto& kind = field(j, "kind", "");
  if (!kind.is_string()) throw ParseError("expected a string at /kind");
  c.kind = certificate_kind_from_string(kind.get<std::string>());

  const auto& alphabet = field(j, "alphabet", "");
  const std::size_t target_size = natural(field(alphabet, "target_size", "/alphabet"),
                                          "/alphabet/target_size");
  c.target = word_at(field(j, "target", ""), target_size, "/target");
  if (j.contains("condition")) {
    const std::size_t condition_size = natural(field(alphabet, "condition_size", "/alphabet"),
                                               "/alphabet/condition_size");
    c.condition = word_at(j["condition"], condition_size, "/condition");
  }

  const auto& nfa = field(j, "nfa", "");
  const std::size_t states = natural(field(nfa, "states", "/nfa"), "/nfa/states");
  const State start = static_cast<State>(natural(field(nfa, "start", "/nfa"), "/nfa/start"));
  std::vector<State> accepts = symbols(field(nfa, "accepts", "/nfa"), "/nfa/accepts");
  const auto& edge_list = field(nfa, "edges", "/nfa");
  if (!edge_list.is_array()) throw ParseError("expected an array at /nfa/edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string path = "/nfa/edges/" + std::to_string(i);
    auto triple = symbols(edge_list[i], path);
    if (triple.size() != 3) throw ParseError("expected [from,label,to] at " + path);
    edges.push_back({triple[0], triple[1], triple[2]});
  }
  const std::size_t alphabet_size =
      c.condition ? c.condition->alphabet_size() * target_size : target_size;
  try {
    c.nfa = Nfa(states, alphabet_size, start, std::move(accepts), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " at /nfa");
  }
  c.claimed_states = natural(field(j, "claimed_states", ""), "/claimed_states");
  return c;
}

}  // namespace autocomplexity
