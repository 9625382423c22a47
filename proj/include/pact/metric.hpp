#ifndef PACT_METRIC_HPP
#define PACT_METRIC_HPP

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace pact {

// Point-pair distance, either a dense symmetric table or a lazy max-combination
// of two factor metrics (used for large product carriers where a dense table
// would not fit in memory).
class Metric {
public:
    Metric() = default;

    static Metric dense(int n, std::vector<double> table) {
        if (static_cast<size_t>(n) * n != table.size())
            throw std::invalid_argument("metric table size does not match point count");
        Metric m;
        m.n_ = n;
        m.table_ = std::make_shared<std::vector<double>>(std::move(table));
        return m;
    }

    static Metric max_product(Metric left, Metric right) {
        Metric m;
        m.left_ = std::make_shared<Metric>(std::move(left));
        m.right_ = std::make_shared<Metric>(std::move(right));
        m.rn_ = m.right_->size();
        m.n_ = m.left_->size() * m.rn_;
        return m;
    }

    int size() const { return n_; }
    bool is_dense() const { return table_ != nullptr; }
    const double* raw_table() const { return table_ ? table_->data() : nullptr; }

    double operator()(int i, int j) const {
        if (table_) return (*table_)[static_cast<size_t>(i) * n_ + j];
        return std::max((*left_)(i / rn_, j / rn_), (*right_)(i % rn_, j % rn_));
    }

    // Pointwise monotone rescaling; materializes a dense table.
    template <class F>
    Metric transformed(F&& f) const {
        std::vector<double> t(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t[static_cast<size_t>(i) * n_ + j] = f((*this)(i, j));
        return dense(n_, std::move(t));
    }

    double diameter() const {
        double d = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) d = std::max(d, (*this)(i, j));
        return d;
    }

private:
    int n_ = 0;
    std::shared_ptr<std::vector<double>> table_;
    std::shared_ptr<Metric> left_, right_;
    int rn_ = 0;
};

} // namespace pact

#endif
