#pragma once

#include <cstddef>
#include <vector>

namespace invgeo {

/// Dense cubic array of side dim, row-major in (i, j, k).
template <class Scalar>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim, const Scalar& fill = Scalar{})
        : dim_(dim), data_(dim * dim * dim, fill) {}

    std::size_t dim() const { return dim_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * dim_ + j) * dim_ + k];
    }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    template <class F>
    auto map(F&& f) const -> Tensor3<decltype(f(std::declval<const Scalar&>()))> {
        Tensor3<decltype(f(std::declval<const Scalar&>()))> out(dim_);
        for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = f(data_[n]);
        return out;
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    template <class>
    friend class Tensor3;

    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

/// Dense quartic array of side dim, row-major in (i, j, k, l).
template <class Scalar>
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t dim, const Scalar& fill = Scalar{})
        : dim_(dim), data_(dim * dim * dim * dim, fill) {}

    std::size_t dim() const { return dim_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    friend bool operator==(const Tensor4&, const Tensor4&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

/// Dense square matrix of side dim, row-major.
template <class Scalar>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim, const Scalar& fill = Scalar{}) : dim_(dim), data_(dim * dim, fill) {}

    std::size_t dim() const { return dim_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace invgeo
