// The instrumented min-max scan: min over rows of (max over columns),
// abandoning a row right after reading an element strictly greater than the
// current bound. Only comparisons are used, so any totally ordered scalar
// works (doubles in (0,1), integer ranks, small alphabets).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace minmax {

template <typename T>
struct Matrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<T> values;  // row-major, n_rows * n_cols entries

    T operator()(int row, int col) const {
        return values[static_cast<std::size_t>(row) * n_cols + col];
    }
    T& operator()(int row, int col) {
        return values[static_cast<std::size_t>(row) * n_cols + col];
    }
};

template <typename T>
void validate_matrix(const Matrix<T>& matrix) {
    if (matrix.n_rows < 1 || matrix.n_cols < 1) {
        throw std::invalid_argument("matrix must have at least one row and one column");
    }
    const auto expected =
        static_cast<std::size_t>(matrix.n_rows) * static_cast<std::size_t>(matrix.n_cols);
    if (matrix.values.size() != expected) {
        throw std::invalid_argument("matrix value count does not match its dimensions");
    }
}

template <typename T>
Matrix<T> make_matrix(int n_rows, int n_cols, std::vector<T> values) {
    Matrix<T> matrix{n_rows, n_cols, std::move(values)};
    validate_matrix(matrix);
    return matrix;
}

template <typename T>
struct ScanResult {
    T minmax_value{};
    std::size_t total_reads = 0;
    std::vector<int> row_reads;            // per row, always in [1, n_cols]
    std::vector<std::uint8_t> read_mask;   // row-major, 1 = element was read
};

// Count-only scan over a row-major buffer; the hot path for the enumeration
// oracles and the Monte Carlo estimator. An empty `initial_bound` is the
// pseudocode's +infinity.
template <typename T>
std::size_t scan_reads(std::span<const T> values, int n_rows, int n_cols,
                       std::optional<T> initial_bound = std::nullopt) {
    std::size_t reads = 0;
    std::optional<T> minmax = std::move(initial_bound);
    for (int i = 0; i < n_rows; ++i) {
        const T* row = values.data() + static_cast<std::size_t>(i) * n_cols;
        T row_max = row[0];
        ++reads;
        bool abandoned = minmax && row[0] > *minmax;
        for (int j = 1; !abandoned && j < n_cols; ++j) {
            const T element = row[j];
            ++reads;
            if (element > row_max) row_max = element;
            if (minmax && element > *minmax) abandoned = true;
        }
        // An abandoned row has row_max > minmax, so this never fires for it.
        if (!minmax || row_max < *minmax) minmax = row_max;
    }
    return reads;
}

template <typename T>
ScanResult<T> minmax_scan(const Matrix<T>& matrix, std::optional<T> initial_bound = std::nullopt) {
    validate_matrix(matrix);
    const int n = matrix.n_rows;
    const int k = matrix.n_cols;

    ScanResult<T> result;
    result.row_reads.assign(n, 0);
    result.read_mask.assign(static_cast<std::size_t>(n) * k, 0);

    std::optional<T> minmax = std::move(initial_bound);
    for (int i = 0; i < n; ++i) {
        T row_max{};
        int reads_in_row = 0;
        for (int j = 0; j < k; ++j) {
            const T element = matrix(i, j);
            ++reads_in_row;
            result.read_mask[static_cast<std::size_t>(i) * k + j] = 1;
            if (reads_in_row == 1 || element > row_max) row_max = element;
            if (minmax && element > *minmax) break;
        }
        result.row_reads[i] = reads_in_row;
        result.total_reads += static_cast<std::size_t>(reads_in_row);
        if (!minmax || row_max < *minmax) minmax = row_max;
    }
    result.minmax_value = *minmax;
    return result;
}

}  // namespace minmax
