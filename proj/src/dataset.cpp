#include "kmodes/dataset.hpp"

#include <fstream>
#include <string>
#include <unordered_map>
#include <utility>

namespace kmodes {

namespace {

// Splits on every delimiter occurrence; empty fields are kept (an empty token
// is a legal category value).
std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            tokens.emplace_back(line.substr(start));
            return tokens;
        }
        tokens.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

// Accumulates rows one at a time, assigning codes in first-seen order.
class DatasetBuilder {
public:
    void add_row(const std::vector<std::string>& attrs, const std::string* label) {
        if (ds_.n_ == 0 && ds_.dicts_.empty()) {
            ds_.m_ = attrs.size();
            ds_.dicts_.resize(ds_.m_);
            index_.resize(ds_.m_);
            ds_.has_labels_ = label != nullptr;
        }
        if (attrs.size() != ds_.m_) {
            throw DimensionError("row has " + std::to_string(attrs.size()) +
                                 " attributes, expected " + std::to_string(ds_.m_));
        }
        if ((label != nullptr) != ds_.has_labels_) {
            throw DimensionError("label present on some rows but not others");
        }
        for (std::size_t j = 0; j < ds_.m_; ++j) {
            ds_.cells_.push_back(encode(index_[j], ds_.dicts_[j], attrs[j]));
        }
        if (label != nullptr) {
            ds_.labels_.push_back(encode(class_index_, ds_.class_dict_, *label));
        }
        ++ds_.n_;
    }

    Dataset finish() { return std::move(ds_); }

private:
    static Code encode(std::unordered_map<std::string, Code>& index,
                       std::vector<std::string>& dict, const std::string& token) {
        auto [it, inserted] = index.try_emplace(token, static_cast<Code>(dict.size()));
        if (inserted) dict.push_back(token);
        return it->second;
    }

    Dataset ds_;
    std::vector<std::unordered_map<std::string, Code>> index_;
    std::unordered_map<std::string, Code> class_index_;
};

Dataset Dataset::from_tokens(const std::vector<std::vector<std::string>>& rows,
                             const std::optional<std::vector<std::string>>& labels) {
    if (rows.empty()) throw ParseError("empty input: no rows");
    if (labels && labels->size() != rows.size()) {
        throw DimensionError("labels length differs from row count");
    }
    DatasetBuilder builder;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        builder.add_row(rows[i], labels ? &(*labels)[i] : nullptr);
    }
    return builder.finish();
}

Dataset Dataset::from_codes(const std::vector<std::vector<Code>>& rows,
                            const std::optional<std::vector<Code>>& labels) {
    if (rows.empty()) throw ParseError("empty input: no rows");
    if (labels && labels->size() != rows.size()) {
        throw DimensionError("labels length differs from row count");
    }
    Dataset ds;
    ds.n_ = rows.size();
    ds.m_ = rows.front().size();
    ds.dicts_.resize(ds.m_);
    ds.cells_.reserve(ds.n_ * ds.m_);
    for (const auto& row : rows) {
        if (row.size() != ds.m_) throw DimensionError("ragged code matrix");
        for (std::size_t j = 0; j < ds.m_; ++j) {
            ds.cells_.push_back(row[j]);
            // dictionary entry per code so the code < dictionary size
            // invariant holds
            while (ds.dicts_[j].size() <= row[j]) {
                ds.dicts_[j].push_back(std::to_string(ds.dicts_[j].size()));
            }
        }
    }
    if (labels) {
        ds.has_labels_ = true;
        ds.labels_ = *labels;
        for (Code c : ds.labels_) {
            while (ds.class_dict_.size() <= c) {
                ds.class_dict_.push_back(std::to_string(ds.class_dict_.size()));
            }
        }
    }
    return ds;
}

std::span<const Code> Dataset::labels() const {
    if (!has_labels_) throw EvalError("dataset has no class labels");
    return labels_;
}

Dataset load_dataset(const std::filesystem::path& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    DatasetBuilder builder;
    std::string line;
    std::size_t lineno = 0;
    std::size_t raw_columns = 0;
    std::size_t rows = 0;

    if (schema.skip_header) {
        std::getline(in, line);
        ++lineno;
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;  // stray blank lines, usually at EOF

        std::vector<std::string> tokens = split_line(line, schema.delimiter);
        if (rows == 0) {
            raw_columns = tokens.size();
            if (schema.class_column && *schema.class_column >= raw_columns) {
                throw SchemaError("class column " + std::to_string(*schema.class_column) +
                                  " out of range for " + std::to_string(raw_columns) +
                                  " columns");
            }
        } else if (tokens.size() != raw_columns) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(raw_columns) + " columns, got " +
                             std::to_string(tokens.size()));
        }

        if (schema.class_column) {
            std::string label = std::move(tokens[*schema.class_column]);
            tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(*schema.class_column));
            builder.add_row(tokens, &label);
        } else {
            builder.add_row(tokens, nullptr);
        }
        ++rows;
    }
    if (rows == 0) throw ParseError("empty input: " + path.string());
    return builder.finish();
}

Code FrequencyTable::argmax(std::size_t attr) const {
    const auto& counts = counts_[attr];
    Code best = 0;
    for (Code c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[best]) best = c;
    }
    return best;
}

FrequencyTable global_frequency_table(const Dataset& ds) {
    if (ds.n() == 0) throw ConfigError("frequency table over an empty dataset");
    std::vector<std::vector<std::uint32_t>> counts(ds.m());
    for (std::size_t j = 0; j < ds.m(); ++j) counts[j].resize(ds.domain_size(j), 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto row = ds.row(i);
        for (std::size_t j = 0; j < ds.m(); ++j) ++counts[j][row[j]];
    }
    return FrequencyTable(std::move(counts));
}

FrequencyTable cluster_frequency_table(const Dataset& ds, const Assignment& assignment,
                                       std::size_t cluster) {
    if (assignment.cluster_of.size() != ds.n()) {
        throw DimensionError("assignment length differs from object count");
    }
    if (cluster >= assignment.k) {
        throw std::out_of_range("cluster " + std::to_string(cluster) + " >= k = " +
                                std::to_string(assignment.k));
    }
    std::vector<std::vector<std::uint32_t>> counts(ds.m());
    for (std::size_t j = 0; j < ds.m(); ++j) counts[j].resize(ds.domain_size(j), 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        if (assignment.cluster_of[i] != cluster) continue;
        auto row = ds.row(i);
        for (std::size_t j = 0; j < ds.m(); ++j) ++counts[j][row[j]];
    }
    return FrequencyTable(std::move(counts));
}

}  // namespace kmodes
