#include "seqmm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seqmm::io {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw io_error("failed to parse " + path.string() + ": " + e.what());
    }
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw io_error("write failed for " + path.string());
    }
}

}  // namespace

void write_sequence_set(const std::filesystem::path& path, const SequenceSet& x) {
    json data = json::array();
    const std::vector<double> phases = x.phases();
    for (int j = 0; j < x.m(); ++j) {
        json col = json::array();
        for (int i = 0; i < x.n(); ++i) {
            col.push_back(phases[static_cast<std::size_t>(j) * x.n() + i]);
        }
        data.push_back(std::move(col));
    }
    json doc = {{"n", x.n()}, {"m", x.m()}, {"encoding", "phases"}, {"data", std::move(data)}};
    write_text(path, doc.dump(2) + "\n");
}

SequenceSet read_sequence_set(const std::filesystem::path& path) {
    const json doc = parse_file(path);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("data")) {
        throw io_error(path.string() + ": expected an object with n, m, encoding, data");
    }
    if (doc.value("encoding", "") != "phases") {
        throw io_error(path.string() + ": unsupported encoding (expected \"phases\")");
    }
    const int n = doc["n"].get<int>();
    const int m = doc["m"].get<int>();
    if (n < 1 || m < 1) {
        throw io_error(path.string() + ": n and m must be positive");
    }
    const json& data = doc["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != m) {
        throw io_error(path.string() + ": data must hold one phase array per sequence");
    }
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(n) * m);
    for (const json& col : data) {
        if (!col.is_array() || static_cast<int>(col.size()) != n) {
            throw io_error(path.string() + ": each sequence must hold n phases");
        }
        for (const json& v : col) {
            if (!v.is_number()) {
                throw io_error(path.string() + ": phases must be numbers");
            }
            const double phase = v.get<double>();
            if (!std::isfinite(phase)) {
                throw io_error(path.string() + ": phases must be finite");
            }
            phases.push_back(phase);
        }
    }
    return SequenceSet::from_phases(n, m, phases);
}

WeightProfile read_weights_csv(const std::filesystem::path& path, int expected_n) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open " + path.string());
    }
    std::vector<double> weights;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        double w = 0.0;
        if (!(ss >> w) || !std::isfinite(w)) {
            throw io_error(path.string() + ":" + std::to_string(line_no) +
                           ": expected one finite weight per line");
        }
        if (w < 0.0) {
            throw io_error(path.string() + ":" + std::to_string(line_no) +
                           ": weights must be nonnegative");
        }
        weights.push_back(w);
    }
    if (static_cast<int>(weights.size()) != expected_n) {
        throw io_error(path.string() + ": expected " + std::to_string(expected_n) +
                       " weights, found " + std::to_string(weights.size()));
    }
    return WeightProfile(std::move(weights));
}

void write_levels_csv(const std::filesystem::path& path, std::span<const double> levels, int n) {
    std::ostringstream out;
    out << "lag,level_db\n";
    char buf[64];
    for (int k = 1 - n; k < n; ++k) {
        std::snprintf(buf, sizeof(buf), "%d,%.6f\n", k, levels[k + n - 1]);
        out << buf;
    }
    write_text(path, out.str());
}

void write_levels_csv_all(const std::filesystem::path& path, std::span<const PairLevels> pairs,
                          int n) {
    std::ostringstream out;
    out << "lag,i,j,level_db\n";
    char buf[96];
    for (const PairLevels& p : pairs) {
        for (int k = 1 - n; k < n; ++k) {
            std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.6f\n", k, p.i, p.j,
                          p.levels[k + n - 1]);
            out << buf;
        }
    }
    write_text(path, out.str());
}

void write_report_json(const std::filesystem::path& path, const RunSummary& summary) {
    const SolverReport& rep = summary.report;
    json doc = {
        {"kind", summary.kind},
        {"n", summary.n},
        {"m", summary.m},
        {"seed", summary.config.seed},
        {"trials", summary.config.trials},
        {"tol", summary.config.tol},
        {"max_iter", summary.config.max_iter},
        {"accel", summary.config.accel},
        {"final_objective", rep.final_objective},
        {"iterations", rep.iterations},
        {"mm_map_evals", rep.mm_map_evals},
        {"wall_time_s", rep.wall_time_s},
    };
    if (summary.config.time_limit_s) {
        doc["time_limit_s"] = *summary.config.time_limit_s;
    }
    if (summary.config.objective_floor) {
        doc["objective_floor"] = *summary.config.objective_floor;
    }
    if (rep.lower_bound) {
        doc["lower_bound"] = *rep.lower_bound;
        doc["bound_gap"] = rep.final_objective - *rep.lower_bound;
    }
    if (!rep.trial_objectives.empty()) {
        doc["trial_objectives"] = rep.trial_objectives;
        double avg = 0.0;
        for (double v : rep.trial_objectives) {
            avg += v;
        }
        doc["avg_objective"] = avg / static_cast<double>(rep.trial_objectives.size());
    }
    // Long traces are thinned; the last entry is always kept.
    json trace = json::array();
    const std::size_t max_entries = 20000;
    const std::size_t stride =
        rep.objective_trace.size() > max_entries ? rep.objective_trace.size() / max_entries + 1 : 1;
    for (std::size_t i = 0; i < rep.objective_trace.size(); ++i) {
        if (i % stride == 0 || i + 1 == rep.objective_trace.size()) {
            trace.push_back({rep.objective_trace[i].first, rep.objective_trace[i].second});
        }
    }
    doc["objective_trace"] = std::move(trace);
    write_text(path, doc.dump(2) + "\n");
}

}  // namespace seqmm::io
