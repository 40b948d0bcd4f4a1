#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mdal {

using SampleId = std::int64_t;

/// One datapoint: feature vector, ground-truth class, domain, unique id.
struct Sample {
    SampleId id = 0;
    int domain = 0;
    int label = 0;
    std::vector<double> features;
};

enum class Membership : std::uint8_t { Unlabeled, Labeled, Validation };

/// What a query strategy is allowed to see about an unlabeled sample.
/// Deliberately has no label field; ground truth of unlabeled samples is
/// reachable only through MultiDomainPool::reveal_label.
struct Candidate {
    SampleId id = 0;
    int domain = 0;
    std::span<const double> features;
};

/// A sample whose label is legitimately known (labeled set or validation).
struct LabeledExample {
    SampleId id = 0;
    int domain = 0;
    int label = 0;
    std::span<const double> features;
};

struct SplitConfig {
    std::uint64_t seed = 0;
    std::size_t validation_per_domain = 50;
};

/// Desk-scale multi-domain generator. K class prototypes are shared across
/// domains; domain j sees them rotated by theta_j in the first two feature
/// coordinates and blurred with isotropic noise of scale sigma_j, so
/// inter-domain transfer degrades with |theta_i - theta_j|.
struct SyntheticSpec {
    int num_domains = 2;
    int num_classes = 2;
    int feature_dim = 2;
    std::vector<std::size_t> samples_per_domain;
    std::vector<double> noise_scales;     // sigma_j > 0
    std::vector<double> rotation_angles;  // theta_j, radians
    std::size_t validation_per_domain = 50;
    std::uint64_t seed = 0;
};

/// The partitioned dataset: immutable samples plus the per-run split state
/// (unlabeled / labeled / per-domain validation). Sample storage is shared
/// between copies; each copy owns its split state.
class MultiDomainPool {
public:
    /// Validates samples against (num_classes, num_domains) and draws the
    /// per-domain validation sets with split.seed. Everything else starts
    /// unlabeled; the labeled set starts empty.
    MultiDomainPool(std::vector<Sample> samples, int num_classes, int num_domains,
                    const SplitConfig& split);

    int num_classes() const { return num_classes_; }
    int num_domains() const { return num_domains_; }
    int feature_dim() const { return feature_dim_; }
    std::size_t size() const { return store_->size(); }

    bool contains(SampleId id) const;
    Membership membership(SampleId id) const;
    std::span<const double> features(SampleId id) const;
    int domain_of(SampleId id) const;

    /// Ground truth, guarded: throws unless the sample is labeled or in a
    /// validation set. This is the runtime fence against strategies peeking
    /// at unlabeled labels.
    int label(SampleId id) const;

    /// The labeling oracle: returns the stored ground truth and moves the
    /// sample from the unlabeled set to the labeled set. Throws if the
    /// sample is already labeled or reserved for validation.
    int reveal_label(SampleId id);

    std::size_t num_unlabeled() const { return num_unlabeled_; }
    std::size_t num_labeled() const { return num_labeled_; }

    /// Ascending-id views of the split sets.
    std::vector<SampleId> unlabeled_ids() const;
    std::vector<SampleId> labeled_ids() const;
    std::vector<SampleId> validation_ids(int domain) const;

    /// Unlabeled count per domain. With initial=true, the frozen round-0
    /// composition (the ambient-accuracy weights) instead of the current one.
    std::vector<std::size_t> domain_sizes(bool initial = false) const;
    const std::vector<std::size_t>& initial_unlabeled_sizes() const { return initial_unlabeled_sizes_; }

    /// Label-free view of the current unlabeled pool, ascending by id.
    std::vector<Candidate> unlabeled_candidates() const;
    /// Labeled training examples, ascending by id.
    std::vector<LabeledExample> labeled_examples() const;
    /// Validation examples of one domain (or all domains pooled), ascending by id.
    std::vector<LabeledExample> validation_examples(int domain) const;
    std::vector<LabeledExample> pooled_validation_examples() const;

    /// Keep only the given domains and renumber them 0..k-1 in the order
    /// given; used for domain-composition sweeps. Returns a fresh pool
    /// (new validation split drawn with `split`).
    MultiDomainPool filter_domains(const std::vector<int>& domains, const SplitConfig& split) const;

    /// All samples in ascending id order (for serialization and tests).
    const std::vector<Sample>& samples() const { return *store_; }

private:
    std::size_t index_of(SampleId id) const;

    std::shared_ptr<const std::vector<Sample>> store_;  // sorted by id
    std::shared_ptr<const std::unordered_map<SampleId, std::size_t>> index_;
    int num_classes_ = 0;
    int num_domains_ = 0;
    int feature_dim_ = 0;
    std::vector<Membership> state_;  // aligned to store_
    std::vector<std::size_t> initial_unlabeled_sizes_;
    std::size_t num_unlabeled_ = 0;
    std::size_t num_labeled_ = 0;
};

/// Reads the CSV dataset format: optional `# domains=N classes=K` metadata
/// line, a `id,domain,label,f0,...,f{d-1}` header, then one sample per row.
/// Without metadata, N and K are inferred as max index + 1.
MultiDomainPool load_dataset(const std::string& path, const SplitConfig& split);

/// Debug dump in the same format load_dataset reads; feature values are
/// written with round-trip precision.
void save_dataset(const MultiDomainPool& pool, const std::string& path);

MultiDomainPool generate_synthetic(const SyntheticSpec& spec);

}  // namespace mdal
