#pragma once

// Compute kernels used by the autograd ops. Each kernel has an OpenMP
// version and a serial `_reference` twin kept for testing and benchmarking.
// Parallel kernels assign every output element to exactly one thread and
// accumulate in a fixed order, so results do not depend on the thread count.

#include <cstddef>

namespace pixnav::nn::kernels {

enum class Trans { No, Yes };

// C = alpha * op(A) * op(B) + beta * C, row-major. op(A) is M x K, op(B) is K x N.
template <typename T>
void gemm(Trans ta, Trans tb, int M, int N, int K, T alpha, const T* A, int lda, const T* B, int ldb,
          T beta, T* C, int ldc);

template <typename T>
void gemm_reference(Trans ta, Trans tb, int M, int N, int K, T alpha, const T* A, int lda, const T* B,
                    int ldb, T beta, T* C, int ldc);

struct ConvGeometry {
  int channels = 0;
  int height = 0;
  int width = 0;
  int kernel = 1;
  int stride = 1;
  int pad = 0;
  int out_height() const { return (height + 2 * pad - kernel) / stride + 1; }
  int out_width() const { return (width + 2 * pad - kernel) / stride + 1; }
  int patch() const { return channels * kernel * kernel; }
};

// Unfolds `count` images (NCHW, contiguous) into col[patch][count * out_h * out_w].
template <typename T>
void im2col(const ConvGeometry& g, int count, const T* images, T* col);
template <typename T>
void im2col_reference(const ConvGeometry& g, int count, const T* images, T* col);

// Adjoint of im2col: accumulates col back into (zero-initialised) images.
template <typename T>
void col2im(const ConvGeometry& g, int count, const T* col, T* images);
template <typename T>
void col2im_reference(const ConvGeometry& g, int count, const T* col, T* images);

}  // namespace pixnav::nn::kernels
