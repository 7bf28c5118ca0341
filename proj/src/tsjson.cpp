#include "tsaudit/tsjson.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tsaudit/errors.hpp"

namespace tsaudit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& member(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::string json_quote(const std::string& s) { return json(s).dump(); }

std::string row_text(const RationalVector& row) {
  std::string out = "[";
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ", ";
    out += json_quote(row[k].str());
  }
  return out + "]";
}

}  // namespace

TypeSpace parse_type_space(std::string_view text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
  if (!doc.is_object()) fail("", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "states" && key != "players" && key != "description") fail("/" + key, "unknown key");
  }

  const json& states_json = member(doc, "states", "");
  if (!states_json.is_array() || states_json.empty()) fail("/states", "expected a nonempty array");
  if (states_json.size() > options.max_states) {
    fail("/states", std::to_string(states_json.size()) + " states exceed the limit of " +
                        std::to_string(options.max_states));
  }
  std::vector<std::string> states;
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < states_json.size(); ++k) {
    const std::string path = "/states/" + std::to_string(k);
    std::string label = as_string(states_json[k], path);
    if (!index.emplace(label, k).second) fail(path, "duplicate state label " + json_quote(label));
    states.push_back(std::move(label));
  }
  const std::size_t n = states.size();

  const json& players_json = member(doc, "players", "");
  if (!players_json.is_array() || players_json.empty()) fail("/players", "expected a nonempty array");
  std::vector<PlayerSpec> specs;
  for (std::size_t p = 0; p < players_json.size(); ++p) {
    const std::string base = "/players/" + std::to_string(p);
    const json& pj = players_json[p];
    if (!pj.is_object()) fail(base, "expected an object");
    for (const auto& [key, value] : pj.items()) {
      if (key != "name" && key != "partition" && key != "beliefs") fail(base + "/" + key, "unknown key");
    }
    PlayerSpec spec;
    spec.name = as_string(member(pj, "name", base), base + "/name");

    const json& part = member(pj, "partition", base);
    if (!part.is_array()) fail(base + "/partition", "expected an array of cells");
    std::vector<std::size_t> cell_of(n, n);
    for (std::size_t c = 0; c < part.size(); ++c) {
      const std::string cpath = base + "/partition/" + std::to_string(c);
      if (!part[c].is_array() || part[c].empty()) fail(cpath, "expected a nonempty array of state labels");
      std::vector<std::size_t> cell;
      for (std::size_t k = 0; k < part[c].size(); ++k) {
        const std::string spath = cpath + "/" + std::to_string(k);
        const std::string label = as_string(part[c][k], spath);
        const auto it = index.find(label);
        if (it == index.end()) fail(spath, "unknown state " + json_quote(label));
        if (cell_of[it->second] != n) fail(spath, "state " + json_quote(label) + " appears in two cells");
        cell_of[it->second] = c;
        cell.push_back(it->second);
      }
      spec.partition.push_back(std::move(cell));
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (cell_of[w] == n) fail(base + "/partition", "state " + json_quote(states[w]) + " is in no cell");
    }

    const json& bel = member(pj, "beliefs", base);
    if (!bel.is_object()) fail(base + "/beliefs", "expected an object keyed by state label");
    std::vector<std::optional<RationalVector>> listed(n);
    for (const auto& [key, value] : bel.items()) {
      const std::string rpath = base + "/beliefs/" + key;
      const auto it = index.find(key);
      if (it == index.end()) fail(rpath, "unknown state " + json_quote(key));
      if (!value.is_array() || value.size() != n) {
        fail(rpath, "expected an array of " + std::to_string(n) + " probabilities");
      }
      RationalVector row;
      for (std::size_t k = 0; k < n; ++k) {
        const std::string epath = rpath + "/" + std::to_string(k);
        if (!value[k].is_string()) fail(epath, "probabilities must be strings such as \"1/3\"");
        try {
          row.push_back(Rational::parse(value[k].get<std::string>()));
        } catch (const ParseError& e) {
          fail(epath, e.what());
        }
      }
      listed[it->second] = std::move(row);
    }
    // States without their own row take the first listed row of their cell.
    for (std::size_t c = 0; c < spec.partition.size(); ++c) {
      const RationalVector* fallback = nullptr;
      for (auto w : spec.partition[c]) {
        if (listed[w]) {
          fallback = &*listed[w];
          break;
        }
      }
      if (fallback == nullptr) {
        fail(base + "/beliefs", "no belief row for the cell containing " + json_quote(states[spec.partition[c][0]]));
      }
      for (auto w : spec.partition[c]) {
        if (!listed[w]) listed[w] = *fallback;
      }
    }
    for (std::size_t w = 0; w < n; ++w) spec.beliefs.push_back(std::move(*listed[w]));
    specs.push_back(std::move(spec));
  }

  try {
    return TypeSpace(std::move(states), std::move(specs));
  } catch (const StructureError& e) {
    fail("/players", e.what());
  }
}

std::string serialize_type_space(const TypeSpace& ts) {
  std::ostringstream out;
  out << "{\n  \"states\": [";
  for (std::size_t w = 0; w < ts.num_states(); ++w) {
    out << (w ? ", " : "") << json_quote(ts.state_label(w));
  }
  out << "],\n  \"players\": [\n";
  for (std::size_t i = 0; i < ts.num_players(); ++i) {
    out << "    {\n      \"name\": " << json_quote(ts.player_name(i)) << ",\n      \"partition\": [";
    const auto& cells = ts.cells(i);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << (c ? ", " : "") << "[";
      const auto members = cells[c].indices();
      for (std::size_t k = 0; k < members.size(); ++k) {
        out << (k ? ", " : "") << json_quote(ts.state_label(members[k]));
      }
      out << "]";
    }
    out << "],\n      \"beliefs\": {";
    bool first = true;
    for (const auto& cell : cells) {
      const std::size_t rep = cell.first();
      for (auto w : cell.indices()) {
        if (w != rep && ts.belief(i, w) == ts.belief(i, rep)) continue;
        out << (first ? "\n" : ",\n") << "        " << json_quote(ts.state_label(w)) << ": "
            << row_text(ts.belief(i, w));
        first = false;
      }
    }
    out << "\n      }\n    }" << (i + 1 < ts.num_players() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading \"" + path + "\"");
  return buf.str();
}

}  // namespace tsaudit
