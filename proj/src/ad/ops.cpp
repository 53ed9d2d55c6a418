// Copyright 2026 The qoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qoc/ad/ops.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qoc/error.hpp"
#include "qoc/kernels/dft.hpp"
#include "qoc/kernels/expm.hpp"

namespace qoc::ad {

namespace {

using Inputs = std::span<const Value* const>;
using Grads = std::span<Value* const>;

Var record(std::shared_ptr<Op> op, std::initializer_list<Var> operands) {
  const std::vector<Var> list(operands);
  if (list.empty()) throw Error(Errc::ShapeMismatch, "op without operands");
  return list.front().tape().record(std::move(op), list);
}

void require_real(const Value& v, std::string_view op) {
  if (!v.is_real()) throw Error(Errc::ShapeMismatch, std::string(op) + " expects a real operand");
}

void require_complex(const Value& v, std::string_view op) {
  if (!v.is_complex()) throw Error(Errc::ShapeMismatch, std::string(op) + " expects a complex operand");
}

void require_vector(const Value& v, std::string_view op) {
  if (v.cols() != 1) throw Error(Errc::ShapeMismatch, std::string(op) + " expects an n x 1 sequence");
}

// Adds g into *dst, reducing over broadcast dimensions when dst is 1x1.
void accumulate_real(Value* dst, const RMat& g) {
  if (!dst) return;
  RMat& d = dst->real();
  if (d.rows() == g.rows() && d.cols() == g.cols()) {
    d += g;
  } else {
    d(0, 0) += g.sum();
  }
}

const RMat& broadcast(const RMat& m, const RMat& like, RMat& storage) {
  if (m.rows() == like.rows() && m.cols() == like.cols()) return m;
  storage = RMat::Constant(like.rows(), like.cols(), m(0, 0));
  return storage;
}

void check_broadcast(const Value& a, const Value& b, std::string_view op) {
  if (a.dtype() != b.dtype()) throw Error(Errc::ShapeMismatch, std::string(op) + " mixes real and complex");
  const bool same = a.rows() == b.rows() && a.cols() == b.cols();
  const bool scalar = a.is_real() && (a.is_scalar() || b.is_scalar());
  if (!same && !scalar) throw Error(Errc::ShapeMismatch, std::string(op) + " shape mismatch");
}

class AddOp final : public Op {
 public:
  explicit AddOp(double sign) : sign_(sign) {}
  std::string_view name() const override { return sign_ > 0 ? "add" : "sub"; }
  Value forward(Inputs in) override {
    const Value& a = *in[0];
    const Value& b = *in[1];
    check_broadcast(a, b, name());
    if (a.is_complex()) return Value(CMat(a.complex() + sign_ * b.complex()));
    const bool a_big = a.size() >= b.size();
    RMat tmp;
    const RMat& big = a_big ? a.real() : b.real();
    const RMat& aa = broadcast(a.real(), big, tmp);
    RMat tmp2;
    const RMat& bb = broadcast(b.real(), big, tmp2);
    return Value(RMat(aa + sign_ * bb));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (g.is_complex()) {
      if (gin[0]) gin[0]->complex() += g.complex();
      if (gin[1]) gin[1]->complex() += sign_ * g.complex();
      return;
    }
    accumulate_real(gin[0], g.real());
    accumulate_real(gin[1], sign_ * g.real());
  }

 private:
  double sign_;
};

class MulOp final : public Op {
 public:
  std::string_view name() const override { return "mul"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    require_real(*in[1], name());
    check_broadcast(*in[0], *in[1], name());
    const RMat& big = in[0]->size() >= in[1]->size() ? in[0]->real() : in[1]->real();
    RMat t1;
    RMat t2;
    return Value(RMat(broadcast(in[0]->real(), big, t1).cwiseProduct(broadcast(in[1]->real(), big, t2))));
  }
  void backward(Inputs in, const Value& out, const Value& g, Grads gin) const override {
    const RMat& like = out.real();
    RMat t1;
    RMat t2;
    const RMat& a = broadcast(in[0]->real(), like, t1);
    const RMat& b = broadcast(in[1]->real(), like, t2);
    accumulate_real(gin[0], g.real().cwiseProduct(b));
    accumulate_real(gin[1], g.real().cwiseProduct(a));
  }
};

class ScaleOp final : public Op {
 public:
  explicit ScaleOp(double c) : c_(c) {}
  std::string_view name() const override { return "scale"; }
  Value forward(Inputs in) override {
    if (in[0]->is_real()) return Value(RMat(c_ * in[0]->real()));
    return Value(CMat(c_ * in[0]->complex()));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    if (g.is_real()) {
      gin[0]->real() += c_ * g.real();
    } else {
      gin[0]->complex() += c_ * g.complex();
    }
  }

 private:
  double c_;
};

class ShiftOp final : public Op {
 public:
  explicit ShiftOp(double c) : c_(c) {}
  std::string_view name() const override { return "shift"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    return Value(RMat(in[0]->real().array() + c_));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real() += g.real();
  }

 private:
  double c_;
};

class MulConstOp final : public Op {
 public:
  explicit MulConstOp(RMat c) : c_(std::move(c)) {}
  std::string_view name() const override { return "mul_const"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    if (in[0]->rows() != c_.rows() || in[0]->cols() != c_.cols()) {
      throw Error(Errc::ShapeMismatch, "mul_const shape mismatch");
    }
    return Value(RMat(in[0]->real().cwiseProduct(c_)));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real() += g.real().cwiseProduct(c_);
  }

 private:
  RMat c_;
};

// Elementwise real function given f and f' (derivative may use the output).
class UnaryOp final : public Op {
 public:
  using Fn = std::function<double(double)>;
  using Deriv = std::function<double(double x, double y)>;
  UnaryOp(std::string_view name, Fn f, Deriv df) : name_(name), f_(std::move(f)), df_(std::move(df)) {}
  std::string_view name() const override { return name_; }
  Value forward(Inputs in) override {
    require_real(*in[0], name_);
    return Value(RMat(in[0]->real().unaryExpr(f_)));
  }
  void backward(Inputs in, const Value& out, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    const RMat& x = in[0]->real();
    const RMat& y = out.real();
    RMat& d = gin[0]->real();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      for (Eigen::Index i = 0; i < x.rows(); ++i) d(i, j) += g.real()(i, j) * df_(x(i, j), y(i, j));
    }
  }

 private:
  std::string_view name_;
  Fn f_;
  Deriv df_;
};

class SumOp final : public Op {
 public:
  std::string_view name() const override { return "sum"; }
  Value forward(Inputs in) override {
    if (in[0]->is_real()) return Value::scalar(in[0]->real().sum());
    CMat s(1, 1);
    s(0, 0) = in[0]->complex().sum();
    return Value(std::move(s));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    if (g.is_real()) {
      gin[0]->real().array() += g.real()(0, 0);
    } else {
      gin[0]->complex().array() += g.complex()(0, 0);
    }
  }
};

class ElementOp final : public Op {
 public:
  explicit ElementOp(Eigen::Index i) : i_(i) {}
  std::string_view name() const override { return "element"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    require_vector(*in[0], name());
    if (i_ < 0 || i_ >= in[0]->rows()) throw Error(Errc::ShapeMismatch, "element index out of range");
    return Value::scalar(in[0]->real()(i_, 0));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real()(i_, 0) += g.real()(0, 0);
  }

 private:
  Eigen::Index i_;
};

class MatVecConstOp final : public Op {
 public:
  explicit MatVecConstOp(RMat m) : m_(std::move(m)) {}
  std::string_view name() const override { return "matvec_const"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    if (in[0]->rows() != m_.cols()) throw Error(Errc::ShapeMismatch, "matvec_const shape mismatch");
    return Value(RMat(m_ * in[0]->real()));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real().noalias() += m_.transpose() * g.real();
  }

 private:
  RMat m_;
};

class ToComplexOp final : public Op {
 public:
  std::string_view name() const override { return "to_complex"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    return Value(CMat(in[0]->real().cast<cplx>()));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real() += g.complex().real();
  }
};

class PartOp final : public Op {
 public:
  explicit PartOp(bool imag) : imag_(imag) {}
  std::string_view name() const override { return imag_ ? "imag" : "real"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    if (imag_) return Value(RMat(in[0]->complex().imag()));
    return Value(RMat(in[0]->complex().real()));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    if (imag_) {
      gin[0]->complex().imag() += g.real();
    } else {
      gin[0]->complex().real() += g.real();
    }
  }

 private:
  bool imag_;
};

class MatMulOp final : public Op {
 public:
  std::string_view name() const override { return "matmul"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    require_complex(*in[1], name());
    if (in[0]->cols() != in[1]->rows()) throw Error(Errc::ShapeMismatch, "matmul inner dimension mismatch");
    return Value(CMat(in[0]->complex() * in[1]->complex()));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->complex().noalias() += g.complex() * in[1]->complex().adjoint();
    if (gin[1]) gin[1]->complex().noalias() += in[0]->complex().adjoint() * g.complex();
  }
};

class MatMulConstOp final : public Op {
 public:
  MatMulConstOp(CMat c, bool left) : c_(std::move(c)), left_(left) {}
  std::string_view name() const override { return "matmul_const"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    const CMat& x = in[0]->complex();
    if (left_) {
      if (c_.cols() != x.rows()) throw Error(Errc::ShapeMismatch, "matmul_const dimension mismatch");
      return Value(CMat(c_ * x));
    }
    if (x.cols() != c_.rows()) throw Error(Errc::ShapeMismatch, "matmul_const dimension mismatch");
    return Value(CMat(x * c_));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    if (left_) {
      gin[0]->complex().noalias() += c_.adjoint() * g.complex();
    } else {
      gin[0]->complex().noalias() += g.complex() * c_.adjoint();
    }
  }

 private:
  CMat c_;
  bool left_;
};

class AdjointOp final : public Op {
 public:
  std::string_view name() const override { return "adjoint"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    return Value(CMat(in[0]->complex().adjoint()));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->complex() += g.complex().adjoint();
  }
};

class TraceOp final : public Op {
 public:
  std::string_view name() const override { return "trace"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    if (in[0]->rows() != in[0]->cols()) throw Error(Errc::NonSquare, "trace of a non-square matrix");
    CMat t(1, 1);
    t(0, 0) = in[0]->complex().trace();
    return Value(std::move(t));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->complex().diagonal().array() += g.complex()(0, 0);
  }
};

class Abs2Op final : public Op {
 public:
  std::string_view name() const override { return "abs2"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    return Value(RMat(in[0]->complex().cwiseAbs2()));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->complex() += 2.0 * in[0]->complex().cwiseProduct(g.real().cast<cplx>());
  }
};

class ScaleByOp final : public Op {
 public:
  std::string_view name() const override { return "scale_by"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    require_complex(*in[1], name());
    if (!in[0]->is_scalar()) throw Error(Errc::ShapeMismatch, "scale_by expects a real scalar");
    return Value(CMat(in[0]->real()(0, 0) * in[1]->complex()));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real()(0, 0) += (g.complex().conjugate().cwiseProduct(in[1]->complex())).sum().real();
    if (gin[1]) gin[1]->complex() += in[0]->real()(0, 0) * g.complex();
  }
};

class ScaleConstOp final : public Op {
 public:
  explicit ScaleConstOp(CMat m) : m_(std::move(m)) {}
  std::string_view name() const override { return "scale_const"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    if (!in[0]->is_scalar()) throw Error(Errc::ShapeMismatch, "scale_const expects a real scalar");
    return Value(CMat(in[0]->real()(0, 0) * m_));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (gin[0]) gin[0]->real()(0, 0) += (g.complex().conjugate().cwiseProduct(m_)).sum().real();
  }

 private:
  CMat m_;
};

class KronOp final : public Op {
 public:
  std::string_view name() const override { return "kron"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    require_complex(*in[1], name());
    const CMat& a = in[0]->complex();
    const CMat& b = in[1]->complex();
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
    }
    return Value(std::move(out));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    const CMat& a = in[0]->complex();
    const CMat& b = in[1]->complex();
    const CMat& gc = g.complex();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const auto gblock = gc.block(i * b.rows(), j * b.cols(), b.rows(), b.cols());
        if (gin[0]) gin[0]->complex()(i, j) += gblock.cwiseProduct(b.conjugate()).sum();
        if (gin[1]) gin[1]->complex() += std::conj(a(i, j)) * gblock;
      }
    }
  }
};

class MatExpOp final : public Op {
 public:
  std::string_view name() const override { return "matexp"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    CMat out;
    kernels::expm_forward(in[0]->complex(), out, &cache_);
    return Value(std::move(out));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    CMat gm;
    kernels::expm_backward(cache_, g.complex(), gm);
    gin[0]->complex() += gm;
  }

 private:
  kernels::ExpmCache cache_;
};

class MatExpBatchOp final : public Op {
 public:
  std::string_view name() const override { return "matexp_batch"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    CMat out;
    kernels::expm_batch_forward_omp(in[0]->complex(), out, &caches_);
    return Value(std::move(out));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    CMat gm;
    kernels::expm_batch_backward_omp(caches_, g.complex(), gm);
    gin[0]->complex() += gm;
  }

 private:
  std::vector<kernels::ExpmCache> caches_;
};

class StackOp final : public Op {
 public:
  std::string_view name() const override { return "stack"; }
  Value forward(Inputs in) override {
    const auto d = in[0]->rows();
    CMat out(d, d * static_cast<Eigen::Index>(in.size()));
    for (std::size_t k = 0; k < in.size(); ++k) {
      require_complex(*in[k], name());
      if (in[k]->rows() != d || in[k]->cols() != d) throw Error(Errc::NonSquare, "stack expects equal square blocks");
      out.middleCols(static_cast<Eigen::Index>(k) * d, d) = in[k]->complex();
    }
    return Value(std::move(out));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    const auto d = in[0]->rows();
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (gin[k]) gin[k]->complex() += g.complex().middleCols(static_cast<Eigen::Index>(k) * d, d);
    }
  }
};

class BlockOp final : public Op {
 public:
  explicit BlockOp(Eigen::Index k) : k_(k) {}
  std::string_view name() const override { return "block"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    const auto d = in[0]->rows();
    if (k_ < 0 || (k_ + 1) * d > in[0]->cols()) throw Error(Errc::ShapeMismatch, "block index out of range");
    return Value(CMat(in[0]->complex().middleCols(k_ * d, d)));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    const auto d = in[0]->rows();
    if (gin[0]) gin[0]->complex().middleCols(k_ * d, d) += g.complex();
  }

 private:
  Eigen::Index k_;
};

class AffineBlocksOp final : public Op {
 public:
  AffineBlocksOp(CMat base, std::vector<CMat> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {}
  std::string_view name() const override { return "affine_blocks"; }
  Value forward(Inputs in) override {
    const auto d = base_.rows();
    const auto k = base_.cols() / d;
    if (in.size() != coeffs_.size()) throw Error(Errc::LengthMismatch, "affine_blocks input count");
    CMat out = base_;
    for (std::size_t j = 0; j < in.size(); ++j) {
      require_real(*in[j], name());
      if (in[j]->rows() != k || in[j]->cols() != 1) {
        throw Error(Errc::LengthMismatch, "affine_blocks sequence length differs from block count");
      }
      for (Eigen::Index b = 0; b < k; ++b) {
        out.middleCols(b * d, d) += in[j]->real()(b, 0) * coeffs_[j].middleCols(b * d, d);
      }
    }
    return Value(std::move(out));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    const auto d = base_.rows();
    const auto k = base_.cols() / d;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (!gin[j]) continue;
      for (Eigen::Index b = 0; b < k; ++b) {
        gin[j]->real()(b, 0) +=
            (g.complex().middleCols(b * d, d).conjugate().cwiseProduct(coeffs_[j].middleCols(b * d, d))).sum().real();
      }
    }
  }

 private:
  CMat base_;
  std::vector<CMat> coeffs_;
};

class OrderedProductOp final : public Op {
 public:
  std::string_view name() const override { return "ordered_product"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    const CMat& s = in[0]->complex();
    const auto d = s.rows();
    if (d == 0 || s.cols() % d != 0) throw Error(Errc::NonSquare, "ordered_product expects square blocks");
    const auto k = s.cols() / d;
    prefix_.assign(static_cast<std::size_t>(k), CMat());
    CMat p = s.leftCols(d);
    prefix_[0] = p;
    CMat next(d, d);
    for (Eigen::Index b = 1; b < k; ++b) {
      next.noalias() = s.middleCols(b * d, d) * p;
      p = next;
      prefix_[static_cast<std::size_t>(b)] = p;
    }
    return Value(std::move(p));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    const CMat& s = in[0]->complex();
    const auto d = s.rows();
    const auto k = s.cols() / d;
    CMat gp = g.complex();
    CMat next(d, d);
    CMat& out = gin[0]->complex();
    for (Eigen::Index b = k - 1; b >= 1; --b) {
      out.middleCols(b * d, d).noalias() += gp * prefix_[static_cast<std::size_t>(b - 1)].adjoint();
      next.noalias() = s.middleCols(b * d, d).adjoint() * gp;
      gp = next;
    }
    out.leftCols(d) += gp;
  }

 private:
  std::vector<CMat> prefix_;  // P_b = block_b * ... * block_0
};

class DftOp final : public Op {
 public:
  std::string_view name() const override { return "dft"; }
  Value forward(Inputs in) override {
    require_real(*in[0], name());
    require_vector(*in[0], name());
    const auto n = static_cast<std::size_t>(in[0]->rows());
    std::vector<cplx> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = in[0]->real()(static_cast<Eigen::Index>(k), 0);
    CMat out(static_cast<Eigen::Index>(n), 1);
    kernels::dft_omp(x, std::span<cplx>(out.data(), n));
    return Value(std::move(out));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    // dL/ds_k = Re sum_m G_m e^{+2 pi i m k / N} = N * Re(idft(G))_k
    const auto n = static_cast<std::size_t>(g.rows());
    std::vector<cplx> back(n);
    kernels::idft_omp(std::span<const cplx>(g.complex().data(), n), back);
    for (std::size_t k = 0; k < n; ++k) {
      gin[0]->real()(static_cast<Eigen::Index>(k), 0) += static_cast<double>(n) * back[k].real();
    }
  }
};

class IdftRealOp final : public Op {
 public:
  std::string_view name() const override { return "idft_real"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    require_vector(*in[0], name());
    const CMat& x = in[0]->complex();
    const auto n = static_cast<std::size_t>(x.rows());
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    double asym = std::abs(x(0, 0).imag());
    for (std::size_t m = 1; m < n; ++m) {
      asym = std::max(asym, std::abs(x(static_cast<Eigen::Index>(m), 0) -
                                     std::conj(x(static_cast<Eigen::Index>(n - m), 0))));
    }
    if (asym > kHermitianTolerance * scale) {
      throw Error(Errc::NonHermitianSpectrum,
                  "spectrum deviates from conjugate symmetry by " + std::to_string(asym));
    }
    std::vector<cplx> s(n);
    kernels::idft_omp(std::span<const cplx>(x.data(), n), s);
    RMat out(static_cast<Eigen::Index>(n), 1);
    for (std::size_t k = 0; k < n; ++k) out(static_cast<Eigen::Index>(k), 0) = s[k].real();
    return Value(std::move(out));
  }
  void backward(Inputs, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    // dL/dX_m = dft(g)_m / N under the real-composite convention.
    const auto n = static_cast<std::size_t>(g.rows());
    std::vector<cplx> gs(n);
    for (std::size_t k = 0; k < n; ++k) gs[k] = g.real()(static_cast<Eigen::Index>(k), 0);
    std::vector<cplx> spec(n);
    kernels::dft_omp(gs, spec);
    for (std::size_t m = 0; m < n; ++m) {
      gin[0]->complex()(static_cast<Eigen::Index>(m), 0) += spec[m] / static_cast<double>(n);
    }
  }
};

class KeepHarmonicsOp final : public Op {
 public:
  explicit KeepHarmonicsOp(int nc) : nc_(nc) {}
  std::string_view name() const override { return "keep_harmonics"; }
  Value forward(Inputs in) override {
    require_complex(*in[0], name());
    require_vector(*in[0], name());
    const auto n = in[0]->rows();
    if (nc_ < 0 || 2 * static_cast<Eigen::Index>(nc_) + 1 > n) {
      throw Error(Errc::NcTooLarge, "harmonic cutoff " + std::to_string(nc_) + " exceeds Int((N-1)/2) = " +
                                        std::to_string((n - 1) / 2));
    }
    CMat out = in[0]->complex();
    for (Eigen::Index m = nc_ + 1; m < n - nc_; ++m) out(m, 0) = 0.0;
    return Value(std::move(out));
  }
  void backward(Inputs in, const Value&, const Value& g, Grads gin) const override {
    if (!gin[0]) return;
    const auto n = in[0]->rows();
    for (Eigen::Index m = 0; m < n; ++m) {
      if (m <= nc_ || m >= n - nc_) gin[0]->complex()(m, 0) += g.complex()(m, 0);
    }
  }

 private:
  int nc_;
};

double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Var add(Var a, Var b) { return record(std::make_shared<AddOp>(1.0), {a, b}); }
Var sub(Var a, Var b) { return record(std::make_shared<AddOp>(-1.0), {a, b}); }
Var mul(Var a, Var b) { return record(std::make_shared<MulOp>(), {a, b}); }
Var neg(Var a) { return scale(a, -1.0); }
Var scale(Var a, double c) { return record(std::make_shared<ScaleOp>(c), {a}); }
Var shift(Var a, double c) { return record(std::make_shared<ShiftOp>(c), {a}); }
Var mul_const(Var a, const RMat& c) { return record(std::make_shared<MulConstOp>(c), {a}); }

Var sigmoid(Var a) {
  return record(std::make_shared<UnaryOp>(
                    "sigmoid", logistic, [](double, double y) { return y * (1.0 - y); }),
                {a});
}

Var exp(Var a) {
  return record(std::make_shared<UnaryOp>(
                    "exp", [](double x) { return std::exp(x); }, [](double, double y) { return y; }),
                {a});
}

Var sin(Var a) {
  return record(std::make_shared<UnaryOp>(
                    "sin", [](double x) { return std::sin(x); }, [](double x, double) { return std::cos(x); }),
                {a});
}

Var cos(Var a) {
  return record(std::make_shared<UnaryOp>(
                    "cos", [](double x) { return std::cos(x); }, [](double x, double) { return -std::sin(x); }),
                {a});
}

Var square(Var a) {
  return record(std::make_shared<UnaryOp>(
                    "square", [](double x) { return x * x; }, [](double x, double) { return 2.0 * x; }),
                {a});
}

Var clamp(Var a, double lo, double hi) {
  return record(std::make_shared<UnaryOp>(
                    "clamp", [lo, hi](double x) { return std::clamp(x, lo, hi); },
                    [lo, hi](double x, double) { return (x > lo && x < hi) ? 1.0 : 0.0; }),
                {a});
}

Var sum(Var a) { return record(std::make_shared<SumOp>(), {a}); }
Var element(Var a, Eigen::Index i) { return record(std::make_shared<ElementOp>(i), {a}); }
Var matvec_const(const RMat& m, Var x) { return record(std::make_shared<MatVecConstOp>(m), {x}); }

Var to_complex(Var a) { return record(std::make_shared<ToComplexOp>(), {a}); }
Var real_part(Var z) { return record(std::make_shared<PartOp>(false), {z}); }
Var imag_part(Var z) { return record(std::make_shared<PartOp>(true), {z}); }
Var matmul(Var a, Var b) { return record(std::make_shared<MatMulOp>(), {a, b}); }
Var matmul_const(const CMat& left, Var b) { return record(std::make_shared<MatMulConstOp>(left, true), {b}); }
Var matmul_const(Var a, const CMat& right) { return record(std::make_shared<MatMulConstOp>(right, false), {a}); }
Var adjoint(Var a) { return record(std::make_shared<AdjointOp>(), {a}); }
Var trace(Var a) { return record(std::make_shared<TraceOp>(), {a}); }
Var abs2(Var z) { return record(std::make_shared<Abs2Op>(), {z}); }
Var scale_by(Var s, Var m) { return record(std::make_shared<ScaleByOp>(), {s, m}); }
Var scale_const(Var s, const CMat& m) { return record(std::make_shared<ScaleConstOp>(m), {s}); }
Var kron(Var a, Var b) { return record(std::make_shared<KronOp>(), {a, b}); }
Var matexp(Var m) { return record(std::make_shared<MatExpOp>(), {m}); }

Var stack(std::span<const Var> blocks) {
  if (blocks.empty()) throw Error(Errc::ShapeMismatch, "stack of zero blocks");
  return blocks.front().tape().record(std::make_shared<StackOp>(), blocks);
}

Var block(Var stacked, Eigen::Index k) { return record(std::make_shared<BlockOp>(k), {stacked}); }

Var affine_blocks(const CMat& base, const std::vector<CMat>& coeffs, std::span<const Var> xs) {
  if (xs.empty()) throw Error(Errc::ShapeMismatch, "affine_blocks needs at least one input sequence");
  for (const CMat& c : coeffs) {
    if (c.rows() != base.rows() || c.cols() != base.cols()) {
      throw Error(Errc::ShapeMismatch, "affine_blocks coefficient stack shape mismatch");
    }
  }
  return xs.front().tape().record(std::make_shared<AffineBlocksOp>(base, coeffs), xs);
}

Var matexp_batch(Var stacked) { return record(std::make_shared<MatExpBatchOp>(), {stacked}); }
Var ordered_product(Var stacked) { return record(std::make_shared<OrderedProductOp>(), {stacked}); }

Var dft(Var real_seq) { return record(std::make_shared<DftOp>(), {real_seq}); }
Var idft_real(Var spectrum) { return record(std::make_shared<IdftRealOp>(), {spectrum}); }
Var keep_harmonics(Var spectrum, int nc) { return record(std::make_shared<KeepHarmonicsOp>(nc), {spectrum}); }

}  // namespace qoc::ad
