#pragma once

#include <span>

namespace primeconst {

// Published reference values of f_n and h_n (20 significant digits, rounded
// at the last place) together with p_n, for n = 1..30.
struct Table1Row {
    unsigned n;
    const char* f;
    const char* h;
    unsigned p;
};

std::span<const Table1Row> table1_rows();

}  // namespace primeconst
