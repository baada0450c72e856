#ifndef POLARWAVE_SWEEP_HPP
#define POLARWAVE_SWEEP_HPP

#include <functional>
#include <string>
#include <vector>

#include "polarwave/errors.hpp"

namespace polarwave {

/**
 * Rectangular numeric table with a strictly increasing first column.
 * Missing values are NaN and serialize as "nan".
 */
struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void validate() const;
};

/// One number in the CSV contract: 9 significant digits, minimal exponent
/// digits, e.g. 0.192150 -> "1.92150000e-1".
std::string format_csv_number(double v);

/// Deterministic, byte-stable CSV: header line, LF endings, UTF-8.
void write_csv(const SweepTable& table, const std::string& path);

std::string csv_to_string(const SweepTable& table);

/**
 * Evaluates fn(i) for i in [0, count) with a worker pool and returns results
 * in index order.  Worker count is POLARWAVE_THREADS when set, otherwise the
 * hardware concurrency; the partition never affects the values, so output
 * is identical for any thread count.
 */
std::vector<std::vector<double>> parallel_map_rows(
    std::size_t count, const std::function<std::vector<double>(std::size_t)>& fn);

/// linspace with count >= 2, endpoints included.
std::vector<double> linear_grid(double start, double stop, int count);

int sweep_thread_count();

} // namespace polarwave

#endif
