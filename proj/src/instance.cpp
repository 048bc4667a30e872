#include "nbtsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <numeric>
#include <sstream>

#include "nbtsp/rng.hpp"

namespace nbtsp {

namespace {

void check_no_duplicates(const std::vector<Vec2>& cities) {
  std::vector<int> idx(cities.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (cities[a].x != cities[b].x) return cities[a].x < cities[b].x;
    return cities[a].y < cities[b].y;
  });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (cities[idx[k - 1]] == cities[idx[k]])
      throw ValidationError("cities " + std::to_string(std::min(idx[k - 1], idx[k])) + " and " +
                            std::to_string(std::max(idx[k - 1], idx[k])) +
                            " share identical coordinates");
  }
}

}  // namespace

CityInstance CityInstance::make(std::string name, std::vector<Vec2> cities,
                                std::optional<double> optimal_cost) {
  if (cities.size() < 3) throw DomainError("an instance needs at least 3 cities");
  check_no_duplicates(cities);
  return CityInstance{std::move(name), std::move(cities), Metric::Euclid2D, optimal_cost};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "KEY : value" / "KEY: value" / "KEY value" headers.
bool split_key_value(const std::string& line, std::string& key, std::string& value) {
  std::string work = line;
  const auto colon = work.find(':');
  if (colon != std::string::npos) {
    key = trim(work.substr(0, colon));
    value = trim(work.substr(colon + 1));
  } else {
    std::istringstream ss(work);
    ss >> key;
    std::getline(ss, value);
    value = trim(value);
  }
  return !key.empty();
}

}  // namespace

CityInstance parse_tsplib(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  std::string name = "unnamed";
  long dimension = -1;
  std::string edge_weight_type;
  bool in_coords = false;
  std::vector<Vec2> cities;
  std::size_t coord_section_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;

    if (!in_coords) {
      std::string key, value;
      if (!split_key_value(t, key, value)) continue;
      if (key == "NAME") {
        name = value;
      } else if (key == "TYPE") {
        if (value != "TSP") throw ParseError("TYPE must be TSP, got '" + value + "'", lineno);
      } else if (key == "DIMENSION") {
        try {
          dimension = std::stol(value);
        } catch (const std::exception&) {
          throw ParseError("DIMENSION is not an integer: '" + value + "'", lineno);
        }
      } else if (key == "EDGE_WEIGHT_TYPE") {
        edge_weight_type = value;
        if (value != "EUC_2D" && value != "ATT")
          throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + value + "'", lineno);
      } else if (key == "NODE_COORD_SECTION") {
        if (dimension < 1) throw ParseError("NODE_COORD_SECTION before a valid DIMENSION", lineno);
        in_coords = true;
        coord_section_line = lineno;
      } else if (key == "EOF") {
        break;
      }
      // Other headers (COMMENT, DISPLAY_DATA_TYPE, ...) are ignored.
      continue;
    }

    if (t == "EOF") break;
    std::istringstream ls(t);
    long index = 0;
    double x = 0.0, y = 0.0;
    if (!(ls >> index >> x >> y))
      throw ParseError("malformed coordinate line '" + t + "'", lineno);
    if (index != static_cast<long>(cities.size()) + 1)
      throw ParseError("expected node index " + std::to_string(cities.size() + 1) + ", got " +
                           std::to_string(index),
                       lineno);
    cities.push_back({x, y});
    if (static_cast<long>(cities.size()) == dimension) in_coords = false;
  }

  if (coord_section_line == 0) throw ParseError("missing NODE_COORD_SECTION", lineno);
  if (static_cast<long>(cities.size()) != dimension)
    throw ParseError("DIMENSION is " + std::to_string(dimension) + " but " +
                         std::to_string(cities.size()) + " coordinate lines were found",
                     lineno);

  if (edge_weight_type == "ATT" && warnings)
    warnings->push_back("instance '" + name +
                        "' declares ATT distances; using plain Euclidean distances instead");

  try {
    return CityInstance::make(name, std::move(cities));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), coord_section_line);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), coord_section_line);
  }
}

std::string to_tsplib(const CityInstance& inst) {
  std::ostringstream out;
  out.precision(17);
  out << "NAME : " << inst.name << "\n";
  out << "TYPE : TSP\n";
  out << "DIMENSION : " << inst.cities.size() << "\n";
  out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
  out << "NODE_COORD_SECTION\n";
  for (std::size_t i = 0; i < inst.cities.size(); ++i)
    out << i + 1 << " " << inst.cities[i].x << " " << inst.cities[i].y << "\n";
  out << "EOF\n";
  return out.str();
}

CityInstance gen_random_uniform(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("gen_random_uniform requires n >= 3");
  SplitMix64 rng(seed);
  std::vector<Vec2> cities;
  cities.reserve(n);
  while (static_cast<int>(cities.size()) < n) {
    const Vec2 pt{rng.next_double(), rng.next_double()};
    // Identical draws are measure-zero but would break construction; skip.
    if (std::find(cities.begin(), cities.end(), pt) != cities.end()) continue;
    cities.push_back(pt);
  }
  return CityInstance::make("random-n" + std::to_string(n) + "-s" + std::to_string(seed),
                            std::move(cities));
}

CityInstance gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 3)
    throw DomainError("gen_grid requires rows*cols >= 3");
  std::vector<Vec2> cities;
  cities.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) cities.push_back({static_cast<double>(c), static_cast<double>(r)});

  const int count = rows * cols;
  std::optional<double> optimal;
  if (rows == 1 || cols == 1) {
    optimal = 2.0 * (count - 1);
  } else if (count % 2 == 0) {
    optimal = static_cast<double>(count);
  } else if (rows >= 3 && cols >= 3) {
    optimal = count - 1 + std::sqrt(2.0);
  }
  return CityInstance::make(std::to_string(rows) + "x" + std::to_string(cols) + "-grid",
                            std::move(cities), optimal);
}

DistanceMatrix distance_matrix(const CityInstance& inst) {
  const int n = inst.n();
  DistanceMatrix m{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(inst.cities[i], inst.cities[j]);
      m.d[static_cast<std::size_t>(i) * n + j] = d;
      m.d[static_cast<std::size_t>(j) * n + i] = d;
    }
  return m;
}

EnclosingGeometry enclosing_geometry(const CityInstance& inst) {
  Vec2 sum{0.0, 0.0};
  for (const Vec2& c : inst.cities) sum += c;
  const Vec2 center = sum / static_cast<double>(inst.cities.size());
  double radius = 0.0;
  for (const Vec2& c : inst.cities) radius = std::max(radius, distance(c, center));
  return {center, radius};
}

}  // namespace nbtsp
