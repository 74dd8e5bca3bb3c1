#include "format.hpp"
#include "hullcount/cli.hpp"
#include "hullcount/eaqecc.hpp"
#include "hullcount/formulas.hpp"
#include "hullcount/ratios.hpp"

#include <algorithm>
#include <string>

namespace hullcount::cli {
namespace {

using detail::bool_str;
using detail::csv_field;
using detail::json_count;
using nlohmann::ordered_json;

struct TableCell {
  int hull;
  ExactInt count;
  bool violation;  // this count exceeds the one a step below it
};

struct TableRow {
  TableRowSpec spec;
  std::vector<TableCell> cells;
};

std::vector<TableRow> evaluate(TableKind kind) {
  const bool herm = kind == TableKind::Hermitian;
  const auto& specs = herm ? hermitian_table_rows() : symplectic_table_rows();
  const int step = herm ? 1 : 2;
  std::vector<TableRow> rows;
  for (const auto& s : specs) {
    TableRow row{s, {}};
    for (int l = herm ? 0 : s.k % 2; l <= std::min(s.k, s.n - s.k); l += step) {
      const ExactInt count =
          herm ? count_hermitian({s.n, s.k, l, s.q}) : count_symplectic({s.n / 2, s.k, l, s.q});
      const bool violation = !row.cells.empty() && count > row.cells.back().count;
      row.cells.push_back({l, count, violation});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void render_counts(TableKind kind, OutputFormat format, std::ostream& out) {
  const bool herm = kind == TableKind::Hermitian;
  const char* form = herm ? "hermitian" : "symplectic";
  const int step = herm ? 1 : 2;
  const auto rows = evaluate(kind);
  constexpr int kColumns = 4;

  switch (format) {
    case OutputFormat::Markdown: {
      out << (herm ? "| n | k | q |" : "| 2n | k | q |");
      for (int c = 0; c < kColumns; ++c) out << " A_" << c * step << " |";
      out << "\n|---:|---:|---:|";
      for (int c = 0; c < kColumns; ++c) out << "---:|";
      out << '\n';
      for (const auto& row : rows) {
        out << "| " << row.spec.n << " | " << row.spec.k << " | " << row.spec.q << " |";
        for (int c = 0; c < kColumns; ++c) {
          const auto it = std::find_if(row.cells.begin(), row.cells.end(),
                                       [&](const TableCell& cell) { return cell.hull == c * step; });
          if (it == row.cells.end()) {
            out << "  |";
          } else if (it->violation) {
            out << " **" << it->count.str() << "** |";
          } else {
            out << ' ' << it->count.str() << " |";
          }
        }
        out << '\n';
      }
      break;
    }
    case OutputFormat::Csv:
      out << "n,k,q,form,l,count,monotonicity_violation\n";
      for (const auto& row : rows) {
        for (const auto& cell : row.cells) {
          out << row.spec.n << ',' << row.spec.k << ',' << row.spec.q << ',' << form << ',' << cell.hull << ','
              << cell.count.str() << ',' << bool_str(cell.violation) << '\n';
        }
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json cells = ordered_json::array();
        for (const auto& cell : row.cells) {
          cells.push_back({{"l", cell.hull}, {"count", json_count(cell.count)},
                           {"monotonicity_violation", cell.violation}});
        }
        doc.push_back({{"n", row.spec.n}, {"k", row.spec.k}, {"q", row.spec.q}, {"form", form}, {"cells", cells}});
      }
      detail::write_json(out, doc);
      break;
    }
  }
}

// One line of the comparison table: a label, an optional q, and one value per form.
struct ComparisonLine {
  std::string quantity;
  std::optional<std::int64_t> q;
  std::vector<std::string> values;
};

std::vector<ComparisonLine> comparison_lines(const std::vector<std::int64_t>& qs) {
  const ComparisonTable t = comparison_table(qs);
  std::vector<ComparisonLine> lines;
  auto per_column = [&](auto&& get) {
    std::vector<std::string> v;
    for (const auto& c : t.columns) v.push_back(get(c));
    return v;
  };
  lines.push_back({"step", std::nullopt, per_column([](const ComparisonColumn& c) { return std::to_string(c.step); })});
  lines.push_back({"alpha closed form", std::nullopt,
                   per_column([](const ComparisonColumn& c) { return c.alpha_closed_form; })});
  for (const auto& e : t.entries) {
    std::vector<std::string> v;
    for (const auto& b : e.alpha_lower_bound) v.push_back(b ? b->str() : "none");
    lines.push_back({"alpha lower bound", e.q, v});
  }
  for (const auto& e : t.entries) {
    std::vector<std::string> v;
    for (const auto& a : e.alpha_asymptotic) v.push_back(a.str());
    lines.push_back({"alpha asymptotic", e.q, v});
  }
  for (const auto& e : t.entries) {
    std::vector<std::string> v;
    for (const auto& r : e.ratio_asymptotic) v.push_back(r.str());
    lines.push_back({"asymptotic A_0/A_step", e.q, v});
  }
  lines.push_back({"exceptions", std::nullopt, per_column([](const ComparisonColumn& c) { return c.exceptions; })});
  return lines;
}

void render_comparison(OutputFormat format, std::ostream& out) {
  const auto lines = comparison_lines({2, 3});
  switch (format) {
    case OutputFormat::Markdown:
      out << "| quantity | q | euclidean | hermitian | symplectic |\n|---|---:|---|---|---|\n";
      for (const auto& l : lines) {
        out << "| " << l.quantity << " | " << (l.q ? std::to_string(*l.q) : "") << " |";
        for (const auto& v : l.values) out << ' ' << v << " |";
        out << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "quantity,q,euclidean,hermitian,symplectic\n";
      for (const auto& l : lines) {
        out << csv_field(l.quantity) << ',' << (l.q ? std::to_string(*l.q) : "");
        for (const auto& v : l.values) out << ',' << csv_field(v);
        out << '\n';
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& l : lines) {
        ordered_json row{{"quantity", l.quantity}, {"q", l.q ? ordered_json(*l.q) : ordered_json(nullptr)}};
        row["euclidean"] = l.values[0];
        row["hermitian"] = l.values[1];
        row["symplectic"] = l.values[2];
        doc.push_back(std::move(row));
      }
      detail::write_json(out, doc);
      break;
    }
  }
}

}  // namespace

const std::vector<TableRowSpec>& hermitian_table_rows() {
  static const std::vector<TableRowSpec> rows{
      {4, 1, 2}, {5, 1, 2}, {6, 1, 2}, {7, 1, 2}, {4, 2, 2}, {5, 2, 2}, {6, 2, 2}, {6, 3, 2}, {7, 2, 2},
      {7, 3, 2}, {8, 2, 2}, {4, 1, 3}, {5, 1, 3}, {6, 1, 3}, {4, 2, 3}, {5, 2, 3}, {6, 2, 3}, {6, 3, 3},
  };
  return rows;
}

const std::vector<TableRowSpec>& symplectic_table_rows() {
  static const std::vector<TableRowSpec> rows{
      {4, 2, 2}, {6, 2, 2}, {8, 2, 2}, {8, 4, 2}, {10, 2, 2}, {10, 4, 2},
      {12, 4, 2}, {12, 6, 2}, {4, 2, 3}, {6, 2, 3}, {8, 2, 3}, {8, 4, 3},
  };
  return rows;
}

void render_table(TableKind kind, OutputFormat format, std::ostream& out) {
  if (kind == TableKind::Comparison) {
    render_comparison(format, out);
  } else {
    render_counts(kind, format, out);
  }
}

void render_census(FormKind::Kind form, int length, int k, std::int64_t q, OutputFormat format, std::ostream& out) {
  const auto rows = entanglement_census(form, length, k, q);
  const bool herm = form == FormKind::Kind::Hermitian;
  auto code = [&](const CensusRow& r) {
    return herm ? gjg_map(length, k, r.hull, q).first.str() : wilde_brun_map(length, k, r.hull, q).str();
  };
  switch (format) {
    case OutputFormat::Markdown:
      out << "| l | c | count | eaqecc | exception |\n|---:|---:|---:|---|---|\n";
      for (const auto& r : rows) {
        out << "| " << r.hull << " | " << r.ebits << " | " << r.count.str() << " | " << code(r) << " | "
            << (r.exception ? "yes" : "") << " |\n";
      }
      break;
    case OutputFormat::Csv:
      out << "form,n,k,q,l,c,count,eaqecc,exception\n";
      for (const auto& r : rows) {
        out << to_string(form) << ',' << length << ',' << k << ',' << q << ',' << r.hull << ',' << r.ebits << ','
            << r.count.str() << ',' << csv_field(code(r)) << ',' << bool_str(r.exception) << '\n';
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& r : rows) {
        doc.push_back({{"form", to_string(form)}, {"n", length}, {"k", k}, {"q", q}, {"l", r.hull}, {"c", r.ebits},
                       {"count", json_count(r.count)}, {"eaqecc", code(r)}, {"exception", r.exception}});
      }
      detail::write_json(out, doc);
      break;
    }
  }
}

}  // namespace hullcount::cli
