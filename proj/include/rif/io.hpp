#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rif/datagen.hpp"
#include "rif/eif.hpp"
#include "rif/iforest.hpp"
#include "rif/rotated_forest.hpp"

namespace rif {

// Expected properties of a benchmark file; mismatches against size/dimension
// produce warnings, not errors.
struct DatasetManifestEntry {
    std::string name;
    size_t size = 0;
    size_t dimension = 0;
    size_t anomaly_count = 0;
    std::string normal_value;
    std::string anomaly_value;
};

// The benchmark datasets the harness knows about (standard and
// high-dimensional suites).
const std::vector<DatasetManifestEntry>& builtin_manifest();

const DatasetManifestEntry* find_manifest_entry(const std::string& name);

struct CsvLoadResult {
    LabeledDataset dataset;
    std::vector<std::string> warnings;
};

// CSV with a header; all columns but `label_column` (default: last) are
// features. Labels are matched as exact strings against the manifest entry's
// normal/anomaly values when given, else "0"/"1".
CsvLoadResult load_csv(const std::string& path,
                       const DatasetManifestEntry* manifest = nullptr,
                       std::optional<std::string> label_column = std::nullopt);

void save_csv(const std::string& path, const LabeledDataset& ds);

using AnyForest = std::variant<IsolationForest, ExtendedForest, RotatedForest>;

// Binary model container: 4-byte magic, version, algorithm tag, params, then
// per-tree preorder node arrays (and row-major rotation matrices for RIF).
// All integers and floats little-endian; doubles are 64-bit IEEE.
void save_model(const std::string& path, const AnyForest& forest);
AnyForest load_model(const std::string& path);

std::string algo_name(const AnyForest& forest);
uint32_t forest_dim(const AnyForest& forest);
std::vector<double> score_any(const AnyForest& forest, const Matrix& points);

struct ReportRow {
    std::string dataset;
    std::string algorithm;
    double avg_auc = 0.0;
    double max_auc = 0.0;
    double contamination = 0.0;
    std::string note;  // e.g. per-dataset load errors
};

enum class ReportFormat { Csv, Text };

void emit_report(std::ostream& out, const std::vector<ReportRow>& rows,
                 ReportFormat format);
void emit_report(const std::string& path, const std::vector<ReportRow>& rows,
                 ReportFormat format);

}  // namespace rif
