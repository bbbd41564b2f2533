#include "pnd/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "pnd/error.hpp"

namespace pnd {

namespace {

std::string trim_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<double> parse_real(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return in;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_group(const std::string& entry) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = entry.find('+', start);
    out.push_back(entry.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

std::string join_group(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "+") + n;
  return out;
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
  EdgeListData data;
  std::unordered_map<std::string, NodeId> node_index;
  std::unordered_map<std::string, std::size_t> layer_index;
  std::vector<std::vector<Edge>> layer_edges;
  auto node_of = [&](const std::string& label) {
    auto [it, inserted] = node_index.try_emplace(label, static_cast<NodeId>(data.node_labels.size()));
    if (inserted) data.node_labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(trim_comment(line));
    if (fields.empty()) continue;
    if (!seen_data) {
      seen_data = true;
      std::string first = fields[0];
      std::transform(first.begin(), first.end(), first.begin(), [](unsigned char c) { return std::tolower(c); });
      if (first == "layer" || first == "layer_id") continue;
    }
    if (fields.size() != 3 && fields.size() != 4) {
      parse_fail(line_no, "expected `layer src dst [weight]`, got " + std::to_string(fields.size()) + " fields");
    }
    if (fields.size() == 4 && !parse_real(fields[3])) parse_fail(line_no, "non-numeric weight '" + fields[3] + "'");
    if (fields[1] == fields[2]) parse_fail(line_no, "self-loop on node '" + fields[1] + "'");
    auto [it, inserted] = layer_index.try_emplace(fields[0], data.layer_ids.size());
    if (inserted) {
      data.layer_ids.push_back(fields[0]);
      layer_edges.emplace_back();
    }
    const NodeId a = node_of(fields[1]);
    const NodeId b = node_of(fields[2]);
    layer_edges[it->second].emplace_back(a, b);
  }
  for (const auto& edges : layer_edges) data.layers.emplace_back(data.node_labels.size(), edges);
  return data;
}

EdgeListData read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

Multiplex select_layers(const EdgeListData& data, const std::vector<std::string>& selection) {
  auto find_layer = [&](const std::string& id) {
    auto it = std::find(data.layer_ids.begin(), data.layer_ids.end(), id);
    if (it == data.layer_ids.end()) throw Error(Errc::UnknownLayer, "no layer '" + id + "'");
    return static_cast<std::size_t>(it - data.layer_ids.begin());
  };
  std::vector<Graph> layers;
  std::vector<std::string> names;
  if (selection.empty()) {
    layers = data.layers;
    names = data.layer_ids;
  } else {
    for (const auto& entry : selection) {
      std::vector<Graph> members;
      for (const auto& id : split_group(entry)) members.push_back(data.layers[find_layer(id)]);
      layers.push_back(members.size() == 1 ? members.front() : union_graphs(members));
      names.push_back(entry);
    }
  }
  return Multiplex(std::move(layers), std::move(names), data.node_labels);
}

Multiplex load_multiplex(const std::filesystem::path& path, const std::vector<std::string>& selection) {
  return select_layers(read_edge_list(path), selection);
}

Multiplex merge_layers(const Multiplex& m, const std::vector<std::vector<std::string>>& groups) {
  const auto& names = m.layer_names();
  std::vector<int> group_of(m.layer_count(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& id : groups[g]) {
      auto it = std::find(names.begin(), names.end(), id);
      if (it == names.end()) throw Error(Errc::UnknownLayer, "no layer '" + id + "'");
      auto& slot = group_of[static_cast<std::size_t>(it - names.begin())];
      if (slot != -1) throw Error(Errc::OverlappingGroups, "layer '" + id + "' appears in more than one group");
      slot = static_cast<int>(g);
    }
  }
  std::vector<Graph> layers;
  std::vector<std::string> out_names;
  std::vector<bool> emitted(groups.size(), false);
  for (std::size_t k = 0; k < m.layer_count(); ++k) {
    const int g = group_of[k];
    if (g == -1) {
      layers.push_back(m.layer(k));
      out_names.push_back(names[k]);
      continue;
    }
    if (emitted[static_cast<std::size_t>(g)]) continue;
    emitted[static_cast<std::size_t>(g)] = true;
    std::vector<Graph> members;
    for (std::size_t j = 0; j < m.layer_count(); ++j)
      if (group_of[j] == g) members.push_back(m.layer(j));
    layers.push_back(union_graphs(members));
    out_names.push_back(join_group(groups[static_cast<std::size_t>(g)]));
  }
  return Multiplex(std::move(layers), std::move(out_names), m.node_labels());
}

void write_multiplex(const Multiplex& m, std::ostream& out) {
  auto label = [&](NodeId v) { return m.node_labels().empty() ? std::to_string(v) : m.node_labels()[v]; };
  for (std::size_t k = 0; k < m.layer_count(); ++k)
    for (auto [i, j] : m.layer(k).edges()) out << m.layer_names()[k] << ' ' << label(i) << ' ' << label(j) << '\n';
}

WeightedMatrix parse_weighted_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(trim_comment(line));
    if (fields.empty()) continue;
    std::vector<double> row;
    for (const auto& f : fields) {
      const auto v = parse_real(f);
      if (!v || !std::isfinite(*v)) parse_fail(line_no, "not a finite number: '" + f + "'");
      if (*v < 0.0) parse_fail(line_no, "negative weight " + f);
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n) throw Error(Errc::ParseError, "matrix is not square (row " + std::to_string(i + 1) + ")");
  WeightedMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-9) {
        throw Error(Errc::ParseError,
                    "matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      w.set(i, j, rows[i][j]);
    }
  }
  return w;
}

WeightedMatrix read_weighted_matrix(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_weighted_matrix(in);
}

void write_weighted_matrix(const WeightedMatrix& w, std::ostream& out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) out << (j ? "," : "") << format_double(w(i, j));
    out << '\n';
  }
}

Coordinates parse_coordinates(std::istream& in) {
  Coordinates c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(trim_comment(line));
    if (fields.empty()) continue;
    if (fields.size() != 4) parse_fail(line_no, "expected `label x y z`");
    std::array<double, 3> p{};
    for (int k = 0; k < 3; ++k) {
      const auto v = parse_real(fields[static_cast<std::size_t>(k) + 1]);
      if (!v || !std::isfinite(*v)) parse_fail(line_no, "bad coordinate '" + fields[static_cast<std::size_t>(k) + 1] + "'");
      p[static_cast<std::size_t>(k)] = *v;
    }
    c.labels.push_back(fields[0]);
    c.xyz.push_back(p);
  }
  return c;
}

Coordinates read_coordinates(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_coordinates(in);
}

DistanceSplit split_by_distance(const WeightedMatrix& weights, const Coordinates& coords, double quantile) {
  const std::size_t n = weights.size();
  if (coords.xyz.size() != n) {
    throw Error(Errc::AlignmentError, std::to_string(coords.xyz.size()) + " coordinates for a " +
                                          std::to_string(n) + "-node matrix");
  }
  if (!(quantile >= 0.0 && quantile <= 1.0)) throw Error(Errc::InvalidArgument, "quantile outside [0, 1]");

  struct Ranked {
    double distance;
    Edge edge;
  };
  std::vector<Ranked> ranked;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weights(i, j) <= 0.0) continue;
      const auto& a = coords.xyz[i];
      const auto& b = coords.xyz[j];
      const double d = std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
      ranked.push_back({d, {static_cast<NodeId>(i), static_cast<NodeId>(j)}});
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    return x.edge < y.edge;
  });
  const double cut = quantile * static_cast<double>(ranked.size());
  const auto n_short = static_cast<std::size_t>(std::floor(cut + 1e-9));
  std::vector<Edge> short_edges, long_edges;
  for (std::size_t k = 0; k < ranked.size(); ++k) (k < n_short ? short_edges : long_edges).push_back(ranked[k].edge);

  return DistanceSplit{Multiplex({Graph(n, short_edges), Graph(n, long_edges)}, {"short", "long"}, coords.labels),
                       std::abs(cut - static_cast<double>(n_short)) > 1e-9};
}

Graph density_match_threshold(const WeightedMatrix& weights, std::size_t target_edge_count) {
  const std::size_t n = weights.size();
  struct Entry {
    double weight;
    Edge edge;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (weights(i, j) > 0.0) entries.push_back({weights(i, j), {static_cast<NodeId>(i), static_cast<NodeId>(j)}});
  if (target_edge_count > entries.size()) {
    throw Error(Errc::TargetTooLarge, "target " + std::to_string(target_edge_count) + " exceeds " +
                                          std::to_string(entries.size()) + " non-zero entries");
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.weight > b.weight; });
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < target_edge_count; ++k) edges.push_back(entries[k].edge);
  return Graph(n, edges);
}

WeightedMatrix consensus_network(const std::vector<WeightedMatrix>& matrices) {
  if (matrices.empty()) throw Error(Errc::InvalidArgument, "consensus of zero matrices");
  const std::size_t n = matrices.front().size();
  for (const auto& m : matrices)
    if (m.size() != n) throw Error(Errc::SizeMismatch, "matrices of different sizes");
  WeightedMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t nonzero = 0;
      double sum = 0.0;
      for (const auto& m : matrices) {
        if (m(i, j) != 0.0) {
          ++nonzero;
          sum += m(i, j);
        }
      }
      if (2 * nonzero > matrices.size()) out.set(i, j, sum / static_cast<double>(nonzero));
    }
  }
  return out;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<double> read_values(const std::filesystem::path& path, const std::string& column) {
  auto in = open_input(path);
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  std::ptrdiff_t col = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(trim_comment(line));
    if (fields.empty()) continue;
    if (!column.empty() && col < 0) {
      auto it = std::find(fields.begin(), fields.end(), column);
      if (it == fields.end()) parse_fail(line_no, "no column '" + column + "' in header");
      col = it - fields.begin();
      continue;
    }
    if (!column.empty()) {
      if (static_cast<std::size_t>(col) >= fields.size()) parse_fail(line_no, "missing column '" + column + "'");
      const auto v = parse_real(fields[static_cast<std::size_t>(col)]);
      if (!v) parse_fail(line_no, "not a number: '" + fields[static_cast<std::size_t>(col)] + "'");
      out.push_back(*v);
      continue;
    }
    for (const auto& f : fields) {
      const auto v = parse_real(f);
      if (!v) parse_fail(line_no, "not a number: '" + f + "'");
      out.push_back(*v);
    }
  }
  return out;
}

}  // namespace pnd
