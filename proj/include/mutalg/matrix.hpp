#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace mutalg {

// Dense square matrix, row-major.
template <class T>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n, const T& fill = T()) : n_(n), v_(static_cast<std::size_t>(n) * n, fill) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size())) {
        v_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("Mat: ragged initializer");
            v_.insert(v_.end(), r.begin(), r.end());
        }
    }

    int n() const { return n_; }
    T& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<T>& data() const { return v_; }

    static Mat identity(int n) {
        Mat m(n, T(0));
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n_ == y.n_ && x.v_ == y.v_; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
    friend bool operator<(const Mat& x, const Mat& y) { return x.v_ < y.v_; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.n_, T(0));
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                if (x(i, k) == T(0)) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

private:
    int n_ = 0;
    std::vector<T> v_;
};

}  // namespace mutalg
