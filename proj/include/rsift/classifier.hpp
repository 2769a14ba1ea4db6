#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rsift/geometry.hpp"
#include "rsift/rng.hpp"
#include "rsift/streamline.hpp"

namespace rsift {

/// Two 1-D convolution layers (ReLU + max-pool 2 after each), a dense ReLU
/// layer with dropout, and a sigmoid or softmax head. Valid padding, stride 1.
struct NetConfig {
  int input_points = 22;
  int conv1_filters = 16;
  int conv1_kernel = 5;
  int conv2_filters = 32;
  int conv2_kernel = 3;
  int pool = 2;
  int dense_units = 128;
  int n_outputs = 1;  // 1 -> sigmoid, >1 -> softmax
  double dropout_rate = 0.5;

  int input_len() const { return 3 * input_points; }
  int conv1_out() const { return input_len() - conv1_kernel + 1; }
  int pool1_out() const { return conv1_out() / pool; }
  int conv2_out() const { return pool1_out() - conv2_kernel + 1; }
  int pool2_out() const { return conv2_out() / pool; }
  int flatten_len() const { return pool2_out() * conv2_filters; }

  /// Throws std::invalid_argument if any stage collapses to zero width.
  void validate() const;
};

struct NetParams {
  std::vector<double> conv1_w;  // [f1][k1]
  std::vector<double> conv1_b;  // [f1]
  std::vector<double> conv2_w;  // [f2][f1][k2]
  std::vector<double> conv2_b;  // [f2]
  std::vector<double> dense_w;  // [H][flatten]
  std::vector<double> dense_b;  // [H]
  std::vector<double> out_w;    // [n_out][H]
  std::vector<double> out_b;    // [n_out]

  static NetParams zeros(const NetConfig& cfg);
  static NetParams glorot(const NetConfig& cfg, SplitMix64& rng);

  std::vector<std::span<double>> arrays();
  std::vector<std::span<const double>> arrays() const;
  std::size_t total_parameters() const;
};

/// Per-sample forward state kept for backpropagation. Activation arrays are
/// channel-major.
struct Activations {
  std::vector<double> input;
  std::vector<double> conv1_pre;
  std::vector<double> pool1;
  std::vector<int> pool1_arg;
  std::vector<double> conv2_pre;
  std::vector<double> pool2;
  std::vector<int> pool2_arg;
  std::vector<double> dense_pre;
  std::vector<double> dense_act;     // post-ReLU, pre-dropout
  std::vector<double> dropout_mask;  // 0 or 1/keep; empty in eval mode
  std::vector<double> dropped;
  std::vector<double> logits;
  std::vector<double> probs;
};

struct Network {
  NetConfig config;
  NetParams params;

  explicit Network(const NetConfig& cfg) : config(cfg), params(NetParams::zeros(cfg)) {
    cfg.validate();
  }
  Network(const NetConfig& cfg, SplitMix64& rng) : config(cfg), params(NetParams::glorot(cfg, rng)) {
    cfg.validate();
  }

  /// Deterministic forward pass without dropout.
  std::vector<double> forward_eval(std::span<const double> x, Activations* cache = nullptr) const;
  /// Forward pass with inverted dropout masks drawn from rng.
  std::vector<double> forward_train(std::span<const double> x, SplitMix64& rng,
                                    Activations& cache) const;
};

/// Mean cross-entropy loss over the batch plus exact gradients for every
/// parameter. Dropout masks, when enabled, come from rng.
double batch_loss_and_gradients(const Network& net, const std::vector<std::vector<double>>& inputs,
                                std::span<const std::size_t> batch, std::span<const int> targets,
                                bool use_dropout, SplitMix64* rng, NetParams& grads);

struct AdamParams {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  NetParams m;
  NetParams v;
  std::int64_t step = 0;

  static AdamState zeros(const NetConfig& cfg);
};

/// Bias-corrected Adam update. Throws std::runtime_error on non-finite
/// gradients.
void adam_step(NetParams& params, AdamState& state, const NetParams& grads,
               const AdamParams& hp = {});

/// Oversampling batch stream: each batch holds an equal share per class, the
/// largest class is consumed exactly once per epoch and the smaller classes
/// are reshuffled and recycled whenever they run out.
class BalancedBatcher {
public:
  BalancedBatcher(std::span<const int> labels, int n_classes, std::size_t batch_size,
                  std::uint64_t seed);

  /// All batches of one epoch, in order; advances the internal stream.
  std::vector<std::vector<std::size_t>> epoch();

  std::size_t batches_per_epoch() const { return batches_per_epoch_; }

private:
  std::vector<std::vector<std::size_t>> by_class_;
  std::vector<std::size_t> quota_;  // per-class draw per full batch
  std::size_t majority_class_ = 0;
  std::size_t batches_per_epoch_ = 0;
  std::vector<std::vector<std::size_t>> order_;
  std::vector<std::size_t> cursor_;
  SplitMix64 rng_;

  void refill(std::size_t cls);
};

struct TrainConfig {
  NetConfig net;
  AdamParams adam;
  std::size_t batch_size = 50;
  int epochs = 5;
  int folds = 5;
  std::uint64_t seed = 0;
};

struct Metrics {
  double accuracy = 0.0;
  std::vector<double> per_class_recall;                 // recall of class i
  std::vector<std::vector<std::size_t>> confusion;      // [truth][predicted]

  double sensitivity() const { return per_class_recall.size() > 1 ? per_class_recall[1] : 0.0; }
  double specificity() const { return per_class_recall.empty() ? 0.0 : per_class_recall[0]; }
};

struct CvResult {
  std::vector<Network> models;
  std::vector<Metrics> metrics;
  int selected = 0;
};

/// Stratified k-fold cross-validation with balanced-batch training. The
/// selected model is the fold with the most balanced per-class recall
/// (accuracy breaks ties). Throws if any fold would miss a class.
CvResult train_cv(const std::vector<std::vector<double>>& features, const std::vector<int>& targets,
                  int n_classes, const TrainConfig& config);

Metrics evaluate(const Network& net, const std::vector<std::vector<double>>& features,
                 std::span<const std::size_t> indices, std::span<const int> targets, int n_classes,
                 double threshold = 0.5);

struct Prediction {
  std::vector<double> scores;    // 1 value (sigmoid) or n_outputs (softmax)
  int label = 0;
  std::vector<double> pre_dense;  // dense-layer activations, when requested
};

/// Score >= threshold counts as positive for the binary head; the multi-class
/// head takes the argmax with ties to the lowest class index.
std::vector<Prediction> predict(const Network& net, const std::vector<std::vector<double>>& features,
                                double threshold = 0.5, bool keep_pre_dense = false,
                                int threads = 1);

/// Resample to n_points, normalize each axis to [-1,1] with the given record
/// and interleave coordinates as x1,y1,z1,x2,...
std::vector<double> preprocess(const Streamline& s, const NormalizationRecord& record,
                               int n_points = 22);

void save_checkpoint(const Network& net, const std::filesystem::path& path);
Network load_checkpoint(const std::filesystem::path& path);

}  // namespace rsift
