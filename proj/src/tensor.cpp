#include "btv/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "btv/errors.hpp"

namespace btv {

std::size_t shape_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
}

std::string shape_str(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
    os << "]";
    return os.str();
}

Tensor::Tensor(std::vector<std::size_t> s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    if (shape_numel(shape) != data.size())
        throw DimensionError("tensor data length " + std::to_string(data.size()) + " does not match shape " +
                             shape_str(shape));
}

Tensor Tensor::full(std::vector<std::size_t> s, double v) {
    Tensor t(std::move(s));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
}

double Tensor::scalar_value() const {
    if (numel() != 1) throw ContractError("scalar_value() on tensor of shape " + shape_str(shape));
    return data[0];
}

namespace ops {

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.shape.size() != 2 || b.shape.size() != 2)
        throw DimensionError("matmul expects rank-2 operands, got " + shape_str(a.shape) + " and " +
                             shape_str(b.shape));
    const std::size_t m = a.shape[0], k = a.shape[1], k2 = b.shape[0], n = b.shape[1];
    if (k != k2)
        throw DimensionError("matmul inner extents disagree: " + shape_str(a.shape) + " vs " + shape_str(b.shape));
    Tensor out({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += a.data[i * k + p] * b.data[p * n + j];
            out.data[i * n + j] = acc;
        }
    }
    return out;
}

Tensor matvec(const Tensor& w, const Tensor& x) {
    if (w.shape.size() != 2 || x.shape.size() != 1)
        throw DimensionError("matvec expects [OxI] and [I], got " + shape_str(w.shape) + " and " +
                             shape_str(x.shape));
    const std::size_t o = w.shape[0], in = w.shape[1];
    if (in != x.shape[0])
        throw DimensionError("matvec extents disagree: " + shape_str(w.shape) + " vs " + shape_str(x.shape));
    Tensor out({o});
    for (std::size_t r = 0; r < o; ++r) {
        double acc = 0.0;
        const double* row = &w.data[r * in];
        for (std::size_t c = 0; c < in; ++c) acc += row[c] * x.data[c];
        out.data[r] = acc;
    }
    return out;
}

Tensor conv2d(const Tensor& input, const Tensor& kernels, int stride, int padding) {
    if (input.shape.size() != 3 || kernels.shape.size() != 4)
        throw DimensionError("conv2d expects [CinxHxW] input and [CoutxCinxkxk] kernels, got " +
                             shape_str(input.shape) + " and " + shape_str(kernels.shape));
    if (stride < 1) throw DimensionError("conv2d stride must be positive");
    if (padding < 0) throw DimensionError("conv2d padding must be non-negative");
    const std::size_t cin = input.shape[0], h = input.shape[1], w = input.shape[2];
    const std::size_t cout = kernels.shape[0], kcin = kernels.shape[1], kh = kernels.shape[2], kw = kernels.shape[3];
    if (kcin != cin)
        throw DimensionError("conv2d channel mismatch: input " + shape_str(input.shape) + " kernels " +
                             shape_str(kernels.shape));
    const std::size_t hp = h + 2 * static_cast<std::size_t>(padding);
    const std::size_t wp = w + 2 * static_cast<std::size_t>(padding);
    if (kh > hp || kw > wp)
        throw DimensionError("conv2d kernel " + shape_str(kernels.shape) + " larger than padded input");
    const std::size_t ho = (hp - kh) / static_cast<std::size_t>(stride) + 1;
    const std::size_t wo = (wp - kw) / static_cast<std::size_t>(stride) + 1;

    Tensor out({cout, ho, wo});
    for (std::size_t oc = 0; oc < cout; ++oc) {
        for (std::size_t oy = 0; oy < ho; ++oy) {
            for (std::size_t ox = 0; ox < wo; ++ox) {
                double acc = 0.0;
                const std::ptrdiff_t base_y = static_cast<std::ptrdiff_t>(oy) * stride - padding;
                const std::ptrdiff_t base_x = static_cast<std::ptrdiff_t>(ox) * stride - padding;
                for (std::size_t ic = 0; ic < cin; ++ic) {
                    for (std::size_t ky = 0; ky < kh; ++ky) {
                        const std::ptrdiff_t iy = base_y + static_cast<std::ptrdiff_t>(ky);
                        if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(h)) continue;
                        for (std::size_t kx = 0; kx < kw; ++kx) {
                            const std::ptrdiff_t ix = base_x + static_cast<std::ptrdiff_t>(kx);
                            if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(w)) continue;
                            acc += input.data[(ic * h + static_cast<std::size_t>(iy)) * w +
                                              static_cast<std::size_t>(ix)] *
                                   kernels.data[((oc * cin + ic) * kh + ky) * kw + kx];
                        }
                    }
                }
                out.data[(oc * ho + oy) * wo + ox] = acc;
            }
        }
    }
    return out;
}

Tensor channel_bias(const Tensor& x, const Tensor& b) {
    if (x.shape.size() != 3 || b.shape.size() != 1 || b.shape[0] != x.shape[0])
        throw DimensionError("channel_bias expects [CxHxW] and [C], got " + shape_str(x.shape) + " and " +
                             shape_str(b.shape));
    Tensor out = x;
    const std::size_t plane = x.shape[1] * x.shape[2];
    for (std::size_t c = 0; c < x.shape[0]; ++c)
        for (std::size_t i = 0; i < plane; ++i) out.data[c * plane + i] += b.data[c];
    return out;
}

Tensor relu(const Tensor& x) {
    Tensor out = x;
    for (double& v : out.data) v = v > 0.0 ? v : 0.0;
    return out;
}

Tensor avgpool2x2(const Tensor& x) {
    if (x.shape.size() != 3) throw DimensionError("avgpool2x2 expects [CxHxW], got " + shape_str(x.shape));
    const std::size_t c = x.shape[0], h = x.shape[1], w = x.shape[2];
    if (h % 2 != 0 || w % 2 != 0)
        throw DimensionError("avgpool2x2 requires even spatial extents, got " + shape_str(x.shape));
    Tensor out({c, h / 2, w / 2});
    for (std::size_t ch = 0; ch < c; ++ch) {
        for (std::size_t y = 0; y < h / 2; ++y) {
            for (std::size_t xx = 0; xx < w / 2; ++xx) {
                const std::size_t base = (ch * h + 2 * y) * w + 2 * xx;
                out.data[(ch * (h / 2) + y) * (w / 2) + xx] =
                    0.25 * (x.data[base] + x.data[base + 1] + x.data[base + w] + x.data[base + w + 1]);
            }
        }
    }
    return out;
}

Tensor flatten(const Tensor& x) {
    Tensor out = x;
    out.shape = {x.numel()};
    return out;
}

Tensor add(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b))
        throw DimensionError("add shape mismatch: " + shape_str(a.shape) + " vs " + shape_str(b.shape));
    Tensor out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b))
        throw DimensionError("mul shape mismatch: " + shape_str(a.shape) + " vs " + shape_str(b.shape));
    Tensor out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] *= b.data[i];
    return out;
}

Tensor scale(const Tensor& x, double c) {
    Tensor out = x;
    for (double& v : out.data) v *= c;
    return out;
}

Tensor exp(const Tensor& x) {
    Tensor out = x;
    for (double& v : out.data) v = std::exp(v);
    return out;
}

Tensor sqrt(const Tensor& x) {
    Tensor out = x;
    for (double& v : out.data) v = std::sqrt(v);
    return out;
}

double sum(const Tensor& x) {
    double acc = 0.0;
    for (double v : x.data) acc += v;
    return acc;
}

double mean(const Tensor& x) {
    if (x.numel() == 0) throw DomainError("mean of empty tensor");
    return sum(x) / static_cast<double>(x.numel());
}

double population_std(const std::vector<double>& values) {
    if (values.empty()) throw DomainError("population std of empty sequence");
    // A constant sequence has zero spread by definition; short-circuit so the
    // result is exactly 0 rather than rounding noise from the mean.
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    if (*mn == *mx) return 0.0;
    double m = 0.0;
    for (double v : values) m += v;
    m /= static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - m) * (v - m);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

double reduce_population_std(const Tensor& x) {
    if (x.numel() == 0) throw DomainError("population std of empty tensor");
    return population_std(x.data);
}

}  // namespace ops
}  // namespace btv
