#include <algorithm>

#include "liftable/analysis.hpp"

namespace liftable {

namespace {

// Terminal columns of a UTF-8 string (one per code point).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

}  // namespace

std::vector<DataSet> table_genus3_datasets() {
  const char* rows[] = {
      "(7,0;(1,7),(2,7),(4,7))",   "(7,0;(5,7),(1,7),(1,7))",   "(8,0;(1,4),(1,8),(5,8))",
      "(8,0;(3,4),(1,8),(1,8))",   "(9,0;(1,3),(1,9),(5,9))",   "(12,0;(1,2),(1,12),(5,12))",
      "(12,0;(2,3),(1,4),(1,12))", "(14,0;(1,2),(3,7),(1,14))",
  };
  std::vector<DataSet> out;
  for (const char* r : rows) out.push_back(parse_dataset(r));
  return out;
}

std::vector<TableRow> table_genus3() {
  std::vector<TableRow> out;
  int row = 0;
  for (const auto& d : table_genus3_datasets()) {
    const AnalysisReport rep = analyze(d);
    TableRow t;
    t.row = ++row;
    t.dataset = d;
    t.gamma = rep.gamma;
    t.classification = *rep.classification;
    t.lmod_abelianization = rep.lmod ? abelianization(rep.lmod->presentation).to_string() : "-";
    out.push_back(std::move(t));
  }
  return out;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::vector<std::array<std::string, 5>> cells{{"#", "D_F", "N(F)", "C(F)", "D_G"}};
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.row), format_dataset(r.dataset), r.classification.normalizer.to_string(),
                     r.classification.centralizer.to_string(), "(not computed)"});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], display_width(row[c]));
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) {
      line += row[c];
      if (c + 1 < 5) line += std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace liftable
