#pragma once

#include <cstddef>
#include <vector>

namespace btv {

// Dense n-dimensional array of doubles, row-major. `grad` stays empty until
// a backward sweep fills it; when present it has one entry per data element.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;
    std::vector<double> grad;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s);
    Tensor(std::vector<std::size_t> s, std::vector<double> d);

    static Tensor scalar(double v) { return Tensor({1}, {v}); }
    static Tensor full(std::vector<std::size_t> s, double v);

    std::size_t numel() const { return data.size(); }
    double scalar_value() const;  // numel()==1 accessor

    bool same_shape(const Tensor& other) const { return shape == other.shape; }
};

std::size_t shape_numel(const std::vector<std::size_t>& shape);
std::string shape_str(const std::vector<std::size_t>& shape);

namespace ops {

// Pure forward kernels. The tape records these and adds the matching
// backward rules; inference paths call them directly.

Tensor matmul(const Tensor& a, const Tensor& b);             // [MxK]·[KxN]
Tensor matvec(const Tensor& w, const Tensor& x);             // [OxI]·[I]
Tensor conv2d(const Tensor& input, const Tensor& kernels,    // [CinxHxW], [CoutxCinxkxk]
              int stride, int padding);                      // cross-correlation, no flip
Tensor channel_bias(const Tensor& x, const Tensor& b);       // [CxHxW] + [C]
Tensor relu(const Tensor& x);
Tensor avgpool2x2(const Tensor& x);                          // [CxHxW], H and W even
Tensor flatten(const Tensor& x);
Tensor add(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& x, double c);
Tensor exp(const Tensor& x);
Tensor sqrt(const Tensor& x);

double sum(const Tensor& x);
double mean(const Tensor& x);

// Population standard deviation: sqrt(mean((x - mean(x))^2)), divisor is the
// element count. A bitwise-constant input returns exactly 0.
double reduce_population_std(const Tensor& x);
double population_std(const std::vector<double>& values);

}  // namespace ops
}  // namespace btv
