#pragma once

#include "lik/verifier.hpp"

#include <string>
#include <vector>

namespace lik {

// Serialization of verification reports and value tables. All output is
// deterministic: fixed key order, fixed digit policy (significant digits
// justified by the recorded error bound), no environment-dependent content.

std::string report_to_json(const Report& r);

struct TableRow {
    long index;
    Real value;
    Real err;
    std::string route;
};

// CSV with header index,value,err_est,route.
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::string& family, long n_max, long bits,
                          const std::vector<TableRow>& rows);

// Multi-route lambda table: one row per index, value/err per route and the
// max pairwise discrepancy.
std::string lambda_table_to_csv(const std::vector<std::string>& route_names,
                                const std::vector<std::vector<TableRow>>& per_route);
std::string lambda_table_to_json(long n_max, long bits, const std::vector<std::string>& route_names,
                                 const std::vector<std::vector<TableRow>>& per_route);

std::string scan_to_json(const ConjectureScan& s, long n_max, long bits);
std::string scan_to_csv(const ConjectureScan& s);

}  // namespace lik
