#pragma once

// ---------------------------------------------------------------------------
// Reproduction of the three published constant tables, with per-cell
// absolute error against the printed reference values.
//
//   which = 1: (c1, c2, c3, c4) at eleven values of log x0; the first row
//              has no strong-variant constants (printed as dashes).
//   which = 2: R3 evaluated at the four published (d1, omega) parameter
//              rows, two varying t0 and two varying W3.
//   which = 4: (ell1, ell2, ell3, c1, c2) at eight values of log x0.
//
// Cells carry the computed value, the printed reference, and |difference|;
// tolerance is the table's print precision (1e-4, except 1e-3 for the
// three-decimal R3 table).
// ---------------------------------------------------------------------------

#include <string>
#include <vector>

#include "mertens/f128.hpp"

namespace mertens {

struct TableCell {
    std::string column;
    bool present = true;  // false reproduces a printed dash
    f128 computed = 0;
    double reference = 0;
    double abs_err = 0;
};

struct TableRow {
    std::string label;  // first-column text, e.g. "1.0e5" or "t0=Hhat"
    std::vector<TableCell> cells;
    double max_abs_err = 0;
};

struct TableResult {
    int which = 0;
    double tolerance = 0;
    std::vector<std::string> columns;  // data columns, excluding the label
    std::vector<TableRow> rows;
    double max_abs_err = 0;
    bool pass = false;  // max_abs_err < tolerance
};

TableResult make_table(int which);  // which in {1, 2, 4}; else invalid_argument

std::string table_csv(const TableResult& t);  // label, columns..., abs_err

}  // namespace mertens
