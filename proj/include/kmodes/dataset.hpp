#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmodes/error.hpp"
#include "kmodes/types.hpp"

namespace kmodes {

// Column roles and tokenization rules for a delimited categorical file.
struct Schema {
    char delimiter = ',';
    std::optional<std::size_t> class_column;  // raw column holding the class label
    std::string missing_token = "?";          // encoded as an ordinary category value
    bool skip_header = false;
};

// Dictionary-encoded n x m categorical matrix with per-attribute value
// dictionaries and optional class labels. Immutable after construction; row
// order is exactly input order (downstream tie-breaking depends on it).
class Dataset {
public:
    Dataset() = default;

    // Encode a matrix of raw tokens, codes assigned in first-seen order per
    // attribute. `labels`, when given, must have one entry per row.
    static Dataset from_tokens(const std::vector<std::vector<std::string>>& rows,
                               const std::optional<std::vector<std::string>>& labels = std::nullopt);

    // Build directly from pre-encoded rows; dictionary entries are the code
    // numerals. Intended for tests and synthetic instances.
    static Dataset from_codes(const std::vector<std::vector<Code>>& rows,
                              const std::optional<std::vector<Code>>& labels = std::nullopt);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }

    std::span<const Code> row(std::size_t i) const {
        return {cells_.data() + i * m_, m_};
    }
    Code at(std::size_t i, std::size_t j) const { return cells_[i * m_ + j]; }

    // Dom(A_j) as an ordered list of raw values; position = code.
    const std::vector<std::string>& dictionary(std::size_t attr) const { return dicts_[attr]; }
    std::size_t domain_size(std::size_t attr) const { return dicts_[attr].size(); }
    const std::string& decode(std::size_t attr, Code code) const { return dicts_[attr][code]; }

    bool has_labels() const { return has_labels_; }
    std::span<const Code> labels() const;  // throws EvalError when absent
    const std::vector<std::string>& class_dictionary() const { return class_dict_; }
    std::size_t class_count() const { return class_dict_.size(); }

    bool operator==(const Dataset&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Code> cells_;                      // row-major n*m
    std::vector<std::vector<std::string>> dicts_;  // one dictionary per attribute
    std::vector<Code> labels_;
    std::vector<std::string> class_dict_;
    bool has_labels_ = false;

    friend class DatasetBuilder;
};

// Load a delimited text file, one object per line. Throws ParseError (ragged
// or empty input), SchemaError (class column out of range), IoError.
Dataset load_dataset(const std::filesystem::path& path, const Schema& schema = {});

// Per-attribute value -> occurrence count. Codes are dense, so each attribute
// is a flat count array indexed by code.
class FrequencyTable {
public:
    FrequencyTable() = default;
    explicit FrequencyTable(std::vector<std::vector<std::uint32_t>> counts)
        : counts_(std::move(counts)) {}

    std::size_t attribute_count() const { return counts_.size(); }
    std::size_t domain_size(std::size_t attr) const { return counts_[attr].size(); }
    std::uint32_t count(std::size_t attr, Code code) const { return counts_[attr][code]; }

    // Most frequent code of one attribute; frequency ties break to the lowest
    // code.
    Code argmax(std::size_t attr) const;

    bool operator==(const FrequencyTable&) const = default;

private:
    std::vector<std::vector<std::uint32_t>> counts_;
};

// Counts over the whole dataset, one pass.
FrequencyTable global_frequency_table(const Dataset& ds);

// Counts restricted to rows assigned to `cluster`; all-zero for an empty
// cluster. Throws std::out_of_range when cluster >= assignment.k.
FrequencyTable cluster_frequency_table(const Dataset& ds, const Assignment& assignment,
                                       std::size_t cluster);

}  // namespace kmodes
