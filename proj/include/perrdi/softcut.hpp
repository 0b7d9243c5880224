// Differentiable normalized-cut objective over soft (row-stochastic) node
// assignments, its analytic gradient through row-softmax logits, and a plain
// gradient-descent partitioner with early stopping.
#pragma once

#include <cstdint>
#include <vector>

#include "perrdi/hypergraph.hpp"

namespace perrdi {

// Dense row-major matrix; small helper, no algebra beyond what's needed here.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> data;

    static Matrix zeros(int rows, int cols);
    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// n×k matrix of node-to-part probabilities; every row sums to 1.
struct SoftAssignment {
    Matrix y;

    int n() const { return y.rows; }
    int k() const { return y.cols; }
    void validate() const;
    static SoftAssignment one_hot(const PartitionAssignment& pa);
};

SoftAssignment row_softmax(const Matrix& logits);

struct SoftcutConfig {
    double learning_rate = 1e-2;
    int max_epochs = 5000;
    int patience = 5;            // epochs without improvement before stopping
    double balance_weight = 0.0; // λ on the squared part-size deviation
    double init_scale = 0.1;     // stddev of the Gaussian logit init
    std::uint64_t seed = 0;

    void validate() const;
};

// L = Σ_parts [Σ_{i,j} A_ij · Y_ik · (1 − Y_jk)] / Γ_k
//       + λ · Σ_parts (Σ_i Y_ik − n/k)²
// where Γ_k = Σ_i d_i·Y_ik is the expected part volume. Zero-degree nodes
// make the objective ill-defined and are rejected; Γ_k below 1e-12 raises
// CollapsedPartitionError.
double soft_ncut_loss(const WeightedGraph& g, const SoftAssignment& Y,
                      double balance_weight);

// Exact ∂L/∂Z where Y = row_softmax(Z). Same error conditions as the loss.
Matrix soft_ncut_grad(const WeightedGraph& g, const Matrix& logits,
                      double balance_weight);

struct SoftcutResult {
    SoftAssignment assignment;        // softmax of the best-loss epoch's logits
    std::vector<double> loss_history; // loss at every epoch, in order
    double best_loss = 0.0;
    int best_epoch = 0;
    int epochs_run = 0;
};

// Gradient descent on free per-node logits from a seeded Gaussian init.
// Stops at max_epochs, or once the best loss has not improved by at least
// 1e-9 for `patience` consecutive epochs. Non-finite loss raises
// DivergenceError naming the epoch. Note an exactly-uniform init
// (init_scale = 0) is a stationary point: the run ends at loss k−1.
SoftcutResult optimize_soft(const WeightedGraph& g, int k, const SoftcutConfig& cfg);

// Per-row argmax; ties go to the lowest part index.
PartitionAssignment harden(const SoftAssignment& Y);

}  // namespace perrdi
