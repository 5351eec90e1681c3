#include "rif/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rif {

namespace {

// ---------------------------------------------------------------- manifest

const std::vector<DatasetManifestEntry>& manifest_entries() {
    static const std::vector<DatasetManifestEntry> entries = {
        {"Ionosphere", 351, 33, 126, "g", "B"},
        {"Http", 567467, 3, 2213, "0", "1"},
        {"Satellite", 6435, 36, 2059, "Normal", "Anomaly"},
        {"Shuttle", 57990, 9, 3501, "0", "1"},
        {"Smtp", 96554, 38, 1183, "0", "1"},
        {"Cardio", 1831, 21, 190, "0", "1"},
        {"ForestCover", 286047, 11, 2747, "2", "4"},
        {"Mammography", 11183, 6, 259, "-1", "1"},
        {"Pima", 1832, 21, 641, "0", "1"},
        {"backdoor", 95329, 196, 2330, "0", "1"},
        {"census", 299285, 500, 18569, "0", "1"},
        {"madelon", 2600, 501, 1301, "0", "1"},
        {"musk", 6598, 168, 1018, "1", "0"},
        {"scene", 2407, 300, 432, "1", "0"},
        {"Arrhythmia", 420, 271, 208, "1", "0"},
        {"SpamBase", 4601, 58, 1814, "0", "1"},
        {"DDos", 66237, 79, 31285, "DDoS", "BENIGN"},
        {"Oil-Spill", 937, 50, 42, "-1", "1"},
    };
    return entries;
}

// ------------------------------------------------------------------- binary

constexpr char MAGIC[4] = {'R', 'I', 'F', 'M'};
constexpr uint32_t FORMAT_VERSION = 1;

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open file for writing: " + path);
    }

    void u8(uint8_t v) { out_.put(static_cast<char>(v)); }
    void u32(uint32_t v) { le(v); }
    void u64(uint64_t v) { le(v); }
    void i32(int32_t v) { le(static_cast<uint32_t>(v)); }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        le(bits);
    }
    void check() {
        if (!out_) throw std::runtime_error("model write failed");
    }

private:
    template <typename T>
    void le(T v) {
        char buf[sizeof(T)];
        for (size_t i = 0; i < sizeof(T); ++i)
            buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out_.write(buf, sizeof(T));
    }
    std::ofstream out_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw std::runtime_error("cannot open model file: " + path);
    }

    uint8_t u8() {
        const int c = in_.get();
        if (c == EOF) fail();
        return static_cast<uint8_t>(c);
    }
    uint32_t u32() { return le<uint32_t>(); }
    uint64_t u64() { return le<uint64_t>(); }
    int32_t i32() { return static_cast<int32_t>(le<uint32_t>()); }
    double f64() {
        const uint64_t bits = le<uint64_t>();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }

private:
    template <typename T>
    T le() {
        char buf[sizeof(T)];
        in_.read(buf, sizeof(T));
        if (in_.gcount() != static_cast<std::streamsize>(sizeof(T))) fail();
        T v = 0;
        for (size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<unsigned char>(buf[i])) << (8 * i);
        return v;
    }
    [[noreturn]] void fail() { throw std::runtime_error("model file truncated"); }
    std::ifstream in_;
};

enum : uint8_t { NODE_LEAF = 0, NODE_AXIS = 1, NODE_HYPERPLANE = 2 };
enum : uint8_t { ALGO_IFOREST = 0, ALGO_EIF = 1, ALGO_RIF = 2 };

void write_tree(Writer& w, const ITree& tree) {
    w.u32(tree.depth_limit);
    w.u32(tree.psi);
    w.u64(tree.nodes.size());
    for (const TreeNode& node : tree.nodes) {
        if (node.is_leaf()) {
            const Leaf& leaf = node.leaf();
            w.u8(NODE_LEAF);
            w.u32(leaf.size);
            w.u32(leaf.level);
            continue;
        }
        const SplitRule& rule = node.rule();
        if (const auto* axis = std::get_if<AxisSplit>(&rule)) {
            w.u8(NODE_AXIS);
            w.i32(node.left);
            w.i32(node.right);
            w.u32(axis->dim);
            w.f64(axis->value);
        } else {
            const auto& hp = std::get<HyperplaneSplit>(rule);
            w.u8(NODE_HYPERPLANE);
            w.i32(node.left);
            w.i32(node.right);
            w.u32(static_cast<uint32_t>(hp.normal.size()));
            for (const double v : hp.normal) w.f64(v);
            for (const double v : hp.intercept) w.f64(v);
        }
    }
}

ITree read_tree(Reader& r) {
    ITree tree;
    tree.depth_limit = r.u32();
    tree.psi = r.u32();
    const uint64_t count = r.u64();
    tree.nodes.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        TreeNode node;
        switch (r.u8()) {
            case NODE_LEAF: {
                Leaf leaf;
                leaf.size = r.u32();
                leaf.level = r.u32();
                node.payload = leaf;
                break;
            }
            case NODE_AXIS: {
                node.left = r.i32();
                node.right = r.i32();
                AxisSplit axis;
                axis.dim = r.u32();
                axis.value = r.f64();
                node.payload = SplitRule{axis};
                break;
            }
            case NODE_HYPERPLANE: {
                node.left = r.i32();
                node.right = r.i32();
                const uint32_t d = r.u32();
                HyperplaneSplit hp;
                hp.normal.resize(d);
                hp.intercept.resize(d);
                for (auto& v : hp.normal) v = r.f64();
                for (auto& v : hp.intercept) v = r.f64();
                node.payload = SplitRule{std::move(hp)};
                break;
            }
            default:
                throw std::runtime_error("corrupt model file: bad node tag");
        }
        tree.nodes.push_back(std::move(node));
    }
    return tree;
}

void write_params(Writer& w, const ForestParams& p) {
    w.u32(p.trees);
    w.u32(p.psi);
    w.u32(p.depth_limit);
    w.u64(p.seed);
}

ForestParams read_params(Reader& r) {
    ForestParams p;
    p.trees = r.u32();
    p.psi = r.u32();
    p.depth_limit = r.u32();
    p.seed = r.u64();
    return p;
}

// ---------------------------------------------------------------------- csv

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<DatasetManifestEntry>& builtin_manifest() { return manifest_entries(); }

const DatasetManifestEntry* find_manifest_entry(const std::string& name) {
    for (const auto& e : manifest_entries())
        if (e.name == name) return &e;
    return nullptr;
}

CsvLoadResult load_csv(const std::string& path, const DatasetManifestEntry* manifest,
                       std::optional<std::string> label_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": no rows");
    const auto header = split_line(line);
    if (header.empty()) throw std::runtime_error(path + ": empty header");

    size_t label_idx = header.size() - 1;
    if (label_column) {
        bool found = false;
        for (size_t j = 0; j < header.size(); ++j) {
            if (strip(header[j]) == *label_column) {
                label_idx = j;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error(path + ": label column not found: " + *label_column);
    } else {
        for (size_t j = 0; j < header.size(); ++j)
            if (strip(header[j]) == "label") label_idx = j;
    }

    const std::string normal_value = manifest ? manifest->normal_value : "0";
    const std::string anomaly_value = manifest ? manifest->anomaly_value : "1";
    const size_t d = header.size() - 1;

    std::vector<double> values;
    std::vector<bool> labels;
    size_t row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (strip(line).empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error(path + ": row " + std::to_string(row_number) +
                                     " has " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(header.size()));
        }
        for (size_t j = 0; j < cells.size(); ++j) {
            const std::string cell = strip(cells[j]);
            if (j == label_idx) {
                if (cell == normal_value) {
                    labels.push_back(false);
                } else if (cell == anomaly_value) {
                    labels.push_back(true);
                } else {
                    throw std::runtime_error(
                        path + ": row " + std::to_string(row_number) +
                        ": unknown label value \"" + cell + "\" (expected \"" +
                        normal_value + "\" or \"" + anomaly_value + "\")");
                }
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0' || !std::isfinite(v)) {
                throw std::runtime_error(path + ": row " + std::to_string(row_number) +
                                         ", column " + std::to_string(j + 1) +
                                         ": unparseable cell \"" + cell + "\"");
            }
            values.push_back(v);
        }
    }
    if (labels.empty()) throw std::runtime_error(path + ": no rows");

    CsvLoadResult result;
    const size_t n = labels.size();
    result.dataset.points = Matrix(n, d);
    result.dataset.points.data() = std::move(values);
    result.dataset.labels = std::move(labels);
    size_t n_true = 0;
    for (const bool b : result.dataset.labels) n_true += b ? 1 : 0;
    result.dataset.contamination = static_cast<double>(n_true) / static_cast<double>(n);

    if (manifest) {
        if (manifest->size != n) {
            result.warnings.push_back(manifest->name + ": expected " +
                                      std::to_string(manifest->size) + " rows, found " +
                                      std::to_string(n));
        }
        if (manifest->dimension != d) {
            result.warnings.push_back(manifest->name + ": expected dimension " +
                                      std::to_string(manifest->dimension) + ", found " +
                                      std::to_string(d));
        }
    }
    return result;
}

void save_csv(const std::string& path, const LabeledDataset& ds) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    const size_t d = ds.points.cols();
    for (size_t j = 0; j < d; ++j) out << 'f' << j << ',';
    out << "label\n";
    char buf[32];
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        const auto row = ds.points.row(i);
        for (size_t j = 0; j < d; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", row[j]);
            out << buf << ',';
        }
        out << (ds.labels[i] ? '1' : '0') << '\n';
    }
    if (!out) throw std::runtime_error("dataset write failed: " + path);
}

void save_model(const std::string& path, const AnyForest& forest) {
    Writer w(path);
    w.u8(static_cast<uint8_t>(MAGIC[0]));
    w.u8(static_cast<uint8_t>(MAGIC[1]));
    w.u8(static_cast<uint8_t>(MAGIC[2]));
    w.u8(static_cast<uint8_t>(MAGIC[3]));
    w.u32(FORMAT_VERSION);

    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, IsolationForest>) {
                w.u8(ALGO_IFOREST);
            } else if constexpr (std::is_same_v<T, ExtendedForest>) {
                w.u8(ALGO_EIF);
            } else {
                w.u8(ALGO_RIF);
            }
            write_params(w, f.params);
            w.u32(f.dim);
            w.u32(f.psi_effective);
            w.u32(static_cast<uint32_t>(f.trees.size()));
            for (const ITree& tree : f.trees) write_tree(w, tree);
            if constexpr (std::is_same_v<T, RotatedForest>) {
                for (const RotationMatrix& rot : f.rotations)
                    for (const double v : rot.q.data()) w.f64(v);
            }
        },
        forest);
    w.check();
}

AnyForest load_model(const std::string& path) {
    Reader r(path);
    char magic[4];
    for (char& c : magic) c = static_cast<char>(r.u8());
    if (std::memcmp(magic, MAGIC, 4) != 0)
        throw std::runtime_error(path + ": not a model file (bad magic)");
    const uint32_t version = r.u32();
    if (version != FORMAT_VERSION) {
        throw std::runtime_error(path + ": model format version " +
                                 std::to_string(version) + ", this build reads version " +
                                 std::to_string(FORMAT_VERSION));
    }
    const uint8_t algo = r.u8();
    const ForestParams params = read_params(r);
    const uint32_t dim = r.u32();
    const uint32_t psi_effective = r.u32();
    const uint32_t tree_count = r.u32();

    std::vector<ITree> trees;
    trees.reserve(tree_count);
    for (uint32_t i = 0; i < tree_count; ++i) trees.push_back(read_tree(r));

    switch (algo) {
        case ALGO_IFOREST: {
            IsolationForest f;
            f.params = params;
            f.dim = dim;
            f.psi_effective = psi_effective;
            f.trees = std::move(trees);
            return f;
        }
        case ALGO_EIF: {
            ExtendedForest f;
            f.params = params;
            f.dim = dim;
            f.psi_effective = psi_effective;
            f.trees = std::move(trees);
            return f;
        }
        case ALGO_RIF: {
            RotatedForest f;
            f.params = params;
            f.dim = dim;
            f.psi_effective = psi_effective;
            f.trees = std::move(trees);
            f.rotations.reserve(tree_count);
            for (uint32_t i = 0; i < tree_count; ++i) {
                RotationMatrix rot{dim, Matrix(dim, dim)};
                for (auto& v : rot.q.data()) v = r.f64();
                f.rotations.push_back(std::move(rot));
            }
            return f;
        }
        default:
            throw std::runtime_error(path + ": unknown algorithm tag");
    }
}

std::string algo_name(const AnyForest& forest) {
    switch (forest.index()) {
        case 0: return "iforest";
        case 1: return "eif";
        default: return "rif";
    }
}

uint32_t forest_dim(const AnyForest& forest) {
    return std::visit([](const auto& f) { return f.dim; }, forest);
}

std::vector<double> score_any(const AnyForest& forest, const Matrix& points) {
    return std::visit([&](const auto& f) { return score_batch(f, points); }, forest);
}

void emit_report(std::ostream& out, const std::vector<ReportRow>& rows,
                 ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "dataset,algorithm,avg_auc,max_auc,contamination\n";
        for (const auto& row : rows) {
            out << row.dataset << ',' << row.algorithm << ',' << std::fixed
                << std::setprecision(4) << row.avg_auc << ',' << row.max_auc << ','
                << std::setprecision(6) << row.contamination;
            out.unsetf(std::ios::fixed);
            if (!row.note.empty()) out << ',' << row.note;
            out << '\n';
        }
        return;
    }
    out << std::left << std::setw(16) << "dataset" << std::setw(10) << "algorithm"
        << std::right << std::setw(10) << "avg_auc" << std::setw(10) << "max_auc"
        << std::setw(16) << "contamination" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(16) << row.dataset << std::setw(10)
            << row.algorithm << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << row.avg_auc << std::setw(10) << row.max_auc
            << std::setprecision(6) << std::setw(16) << row.contamination;
        out.unsetf(std::ios::fixed);
        if (!row.note.empty()) out << "  " << row.note;
        out << '\n';
    }
}

void emit_report(const std::string& path, const std::vector<ReportRow>& rows,
                 ReportFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    emit_report(out, rows, format);
}

}  // namespace rif
