#include "polarwave/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

namespace polarwave {

void SweepTable::validate() const {
    if (header.empty()) throw Error(ErrorKind::InvalidArgument, "table has no columns");
    for (const auto& row : rows)
        if (row.size() != header.size())
            throw Error(ErrorKind::InvalidArgument, "ragged table row");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i][0] > rows[i - 1][0]))
            throw Error(ErrorKind::InvalidArgument,
                        "abscissa not strictly increasing at row " + std::to_string(i));
}

std::string format_csv_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    // strip leading zeros from the exponent: 1.92150000e-01 -> 1.92150000e-1
    char* e = std::strchr(buf, 'e');
    std::string mant(buf, e);
    const char sign = e[1];
    const char* digits = e + 2;
    while (*digits == '0' && *(digits + 1) != '\0') ++digits;
    return mant + "e" + sign + digits;
}

std::string csv_to_string(const SweepTable& table) {
    table.validate();
    std::string out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ',';
        out += table.header[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_csv_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const SweepTable& table, const std::string& path) {
    const std::string body = csv_to_string(table);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::IoError, "cannot open " + path);
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!os) throw Error(ErrorKind::IoError, "short write to " + path);
}

int sweep_thread_count() {
    if (const char* env = std::getenv("POLARWAVE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw Error(ErrorKind::OutOfRange,
                        "POLARWAVE_THREADS must be a positive integer");
        return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::vector<double>> parallel_map_rows(
    std::size_t count,
    const std::function<std::vector<double>(std::size_t)>& fn) {
    std::vector<std::vector<double>> rows(count);
    const int want = sweep_thread_count();
    const std::size_t n_threads =
        std::min<std::size_t>(count == 0 ? 1 : count, static_cast<std::size_t>(want));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

std::vector<double> linear_grid(double start, double stop, int count) {
    if (count < 2) throw Error(ErrorKind::OutOfRange, "grid count must be >= 2");
    if (!(stop > start))
        throw Error(ErrorKind::OutOfRange, "grid stop must exceed start");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = start + (stop - start) * i / (count - 1);
    return g;
}

} // namespace polarwave
