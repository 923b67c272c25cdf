#include "qtc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qtc/errors.hpp"

#include "json.hpp"

namespace qtc {

using json = nlohmann::ordered_json;

namespace {

json key_row(const SquareKey& k) {
  return json::array({k.level, k.x, k.y});
}

SquareKey key_from_row(const json& row, std::size_t arity) {
  if (!row.is_array() || row.size() != arity) {
    throw FormatError("expected [level,x,y" +
                      std::string(arity == 4 ? ",color" : "") + "] rows");
  }
  for (const auto& v : row) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw FormatError("coordinates must be non-negative integers");
    }
  }
  const std::int64_t level = row[0].get<std::int64_t>();
  const std::int64_t x = row[1].get<std::int64_t>();
  const std::int64_t y = row[2].get<std::int64_t>();
  if (level > kMaxLevel || x > 0x1fffffff || y > 0x1fffffff) {
    throw FormatError("key out of range: level<=" + std::to_string(kMaxLevel));
  }
  return {int(level), std::uint32_t(x), std::uint32_t(y)};
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON");
  return j;
}

void require_format(const json& j, const std::string& tag) {
  if (!j.is_object() || !j.contains("format") || j["format"] != tag) {
    throw FormatError("missing or wrong \"format\" (expected " + tag + ")");
  }
}

// Canonical-order gate shared by all leaf-sequence parsers.
void check_canonical_order(const std::vector<SquareKey>& keys,
                           bool recanonicalize) {
  if (std::is_sorted(keys.begin(), keys.end())) return;
  if (!recanonicalize) {
    throw FormatError(
        "leaves are not in canonical (level,x,y) order; "
        "re-run with recanonicalization enabled to sort them");
  }
}

AdjacencyMode mode_from_string(const std::string& s) {
  if (s == "edge") return AdjacencyMode::edge;
  if (s == "corner") return AdjacencyMode::corner;
  throw FormatError("mode must be \"edge\" or \"corner\"");
}

}  // namespace

std::string tree_to_json(const Quadtree& tree) {
  json j;
  j["format"] = "quadtree-v1";
  json rows = json::array();
  for (const SquareKey& k : tree.leaves()) rows.push_back(key_row(k));
  j["leaves"] = std::move(rows);
  return j.dump(2) + "\n";
}

Quadtree tree_from_json(const std::string& text, bool recanonicalize) {
  const json j = parse(text);
  require_format(j, "quadtree-v1");
  if (!j.contains("leaves") || !j["leaves"].is_array()) {
    throw FormatError("missing \"leaves\" array");
  }
  std::vector<SquareKey> keys;
  keys.reserve(j["leaves"].size());
  for (const auto& row : j["leaves"]) keys.push_back(key_from_row(row, 3));
  check_canonical_order(keys, recanonicalize);
  return Quadtree::from_leaves(std::move(keys));
}

std::string tree_to_text(const Quadtree& tree) {
  std::ostringstream out;
  out << "quadtree-v1\n";
  for (const SquareKey& k : tree.leaves()) {
    out << k.level << ' ' << k.x << ' ' << k.y << '\n';
  }
  return out.str();
}

Quadtree tree_from_text(const std::string& text, bool recanonicalize) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header != "quadtree-v1") {
    throw FormatError("expected header line \"quadtree-v1\"");
  }
  std::vector<SquareKey> keys;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::int64_t level, x, y;
    if (!(row >> level >> x >> y) || level < 0 || level > kMaxLevel || x < 0 ||
        y < 0 || x > 0x1fffffff || y > 0x1fffffff) {
      throw FormatError("bad triple at line " + std::to_string(lineno));
    }
    std::string rest;
    if (row >> rest) {
      throw FormatError("trailing tokens at line " + std::to_string(lineno));
    }
    keys.push_back({int(level), std::uint32_t(x), std::uint32_t(y)});
  }
  check_canonical_order(keys, recanonicalize);
  return Quadtree::from_leaves(std::move(keys));
}

std::string coloring_to_json(const Coloring& c) {
  json j;
  j["format"] = "coloring-v1";
  j["mode"] = to_string(c.mode);
  json rows = json::array();
  for (std::size_t i = 0; i < c.keys.size(); ++i) {
    rows.push_back(json::array(
        {c.keys[i].level, c.keys[i].x, c.keys[i].y, c.colors[i]}));
  }
  j["colors"] = std::move(rows);
  return j.dump(2) + "\n";
}

Coloring coloring_from_json(const std::string& text, bool recanonicalize) {
  const json j = parse(text);
  require_format(j, "coloring-v1");
  if (!j.contains("mode") || !j["mode"].is_string()) {
    throw FormatError("missing \"mode\"");
  }
  if (!j.contains("colors") || !j["colors"].is_array()) {
    throw FormatError("missing \"colors\" array");
  }
  Coloring c;
  c.mode = mode_from_string(j["mode"].get<std::string>());
  for (const auto& row : j["colors"]) {
    c.keys.push_back(key_from_row(row, 4));
    const int color = row[3].get<int>();
    c.colors.push_back(color);
    c.palette_size = std::max(c.palette_size, color + 1);
  }
  check_canonical_order(c.keys, recanonicalize);
  if (!std::is_sorted(c.keys.begin(), c.keys.end())) {
    std::vector<std::uint32_t> idx(c.keys.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return c.keys[a] < c.keys[b];
    });
    Coloring sorted;
    sorted.mode = c.mode;
    sorted.palette_size = c.palette_size;
    for (std::uint32_t i : idx) {
      sorted.keys.push_back(c.keys[i]);
      sorted.colors.push_back(c.colors[i]);
    }
    c = std::move(sorted);
  }
  return c;
}

std::string graph_to_json(const AdjacencyGraph& g) {
  json j;
  j["mode"] = to_string(g.mode());
  j["n"] = g.vertex_count();
  json rows = json::array();
  for (const auto& [u, v] : g.edge_pairs()) {
    rows.push_back(json::array({u, v}));
  }
  j["edges"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string witness_to_json(const WitnessReport& report) {
  json j;
  j["format"] = "witness-v1";
  j["mode"] = to_string(report.mode);
  j["found"] = report.found;
  j["chi"] = report.chi;
  j["k_minus_1_exhausted"] = report.k_minus_1_exhausted;
  j["candidates_tried"] = report.candidates_tried;
  if (report.tree) {
    json rows = json::array();
    for (const SquareKey& k : report.tree->leaves()) rows.push_back(key_row(k));
    j["tree"] = json{{"format", "quadtree-v1"}, {"leaves", std::move(rows)}};
  }
  if (report.certificate) {
    const Coloring& c = *report.certificate;
    json rows = json::array();
    for (std::size_t i = 0; i < c.keys.size(); ++i) {
      rows.push_back(json::array(
          {c.keys[i].level, c.keys[i].x, c.keys[i].y, c.colors[i]}));
    }
    j["coloring"] = json{{"format", "coloring-v1"},
                         {"mode", to_string(c.mode)},
                         {"colors", std::move(rows)}};
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << content;
}

namespace {

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{';
  }
  return false;
}

}  // namespace

Quadtree read_tree(const std::string& path, bool recanonicalize) {
  const std::string text = read_file(path);
  return looks_like_json(text) ? tree_from_json(text, recanonicalize)
                               : tree_from_text(text, recanonicalize);
}

Coloring read_coloring(const std::string& path, bool recanonicalize) {
  return coloring_from_json(read_file(path), recanonicalize);
}

}  // namespace qtc
