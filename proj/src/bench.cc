// Copyright 2026 The iqpsim Authors
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

#include "iqpsim/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "iqpsim/engine.h"
#include "iqpsim/sampler.h"

namespace iqp {

std::string Density::label() const {
    if (dense) {
        return "dense";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g-sparse", gamma);
    return buf;
}

IqpCircuit Density::generate(int n, std::uint64_t seed) const {
    return dense ? gen_dense(n, seed) : gen_sparse(n, gamma, seed);
}

Density Density::parse(const std::string &text) {
    if (text == "dense") {
        return {};
    }
    std::string g = text;
    if (g.rfind("sparse:", 0) == 0) {
        g = g.substr(7);
    }
    const std::string suffix = "-sparse";
    if (g.size() > suffix.size() && g.compare(g.size() - suffix.size(), suffix.size(), suffix) == 0) {
        g.resize(g.size() - suffix.size());
    }
    std::size_t used = 0;
    double gamma = 0;
    try {
        gamma = std::stod(g, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != g.size() || !(gamma > 0)) {
        throw std::invalid_argument("density must be 'dense' or a positive gamma, got '" + text + "'");
    }
    return {false, gamma};
}

std::uint64_t bench_instance_seed(std::uint64_t base, int density_index, int n, int rep) {
    return shot_seed(shot_seed(base, std::uint64_t(density_index) * 1000003ULL + std::uint64_t(n)),
                     std::uint64_t(rep));
}

std::vector<BenchRecord> run_bench(const BenchConfig &cfg,
                                   const std::function<void(const BenchRecord &)> &on_record) {
    std::vector<BenchRecord> out;
    for (std::size_t d = 0; d < cfg.densities.size(); d++) {
        const Density &density = cfg.densities[d];
        for (int n = cfg.n_min; n <= cfg.n_max; n++) {
            for (int rep = 0; rep < cfg.reps; rep++) {
                std::uint64_t seed = bench_instance_seed(cfg.seed, int(d), n, rep);
                IqpCircuit c = density.generate(n, seed);
                AmplitudeOptions opts;
                opts.workers = cfg.workers;
                opts.mis_budget = cfg.mis_budget;
                auto start = std::chrono::steady_clock::now();
                PlannedAmplitude res = amplitude_pipeline(full_instance(c), opts);
                auto stop = std::chrono::steady_clock::now();
                BenchRecord rec;
                rec.n = n;
                rec.density = density.label();
                rec.seed = seed;
                rec.k = res.set.size();
                rec.method = "cut";
                rec.workers = cfg.workers;
                rec.seconds = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
                out.push_back(rec);
                if (on_record) {
                    on_record(rec);
                }
            }
        }
    }
    return out;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << kBenchCsvHeader << "\n";
    char buf[64];
    for (const BenchRecord &r : records) {
        std::snprintf(buf, sizeof buf, "%.17g", r.seconds);
        out << r.n << ',' << r.density << ',' << r.seed << ',' << r.k << ',' << r.method << ','
            << r.workers << ',' << buf << "\n";
    }
}

std::vector<BenchRecord> read_bench_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kBenchCsvHeader) {
        throw ParseError("bench csv: expected header '" + std::string(kBenchCsvHeader) + "'");
    }
    std::vector<BenchRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 7) {
            throw ParseError("bench csv line " + std::to_string(line_no) + ": expected 7 fields");
        }
        try {
            BenchRecord r;
            r.n = std::stoi(f[0]);
            r.density = f[1];
            r.seed = std::stoull(f[2]);
            r.k = std::stoi(f[3]);
            r.method = f[4];
            r.workers = std::stoi(f[5]);
            r.seconds = std::strtod(f[6].c_str(), nullptr);
            out.push_back(r);
        } catch (const std::exception &) {
            throw ParseError("bench csv line " + std::to_string(line_no) + ": bad number");
        }
    }
    return out;
}

std::vector<MeanTime> mean_times(const std::vector<BenchRecord> &records) {
    std::vector<MeanTime> out;
    for (const BenchRecord &r : records) {
        MeanTime *slot = nullptr;
        for (MeanTime &m : out) {
            if (m.density == r.density && m.n == r.n) {
                slot = &m;
            }
        }
        if (!slot) {
            out.push_back({r.density, r.n, 0.0, 0});
            slot = &out.back();
        }
        slot->seconds += r.seconds;
        slot->reps++;
    }
    for (MeanTime &m : out) {
        m.seconds /= m.reps;
    }
    return out;
}

std::vector<ExponentFit> fit_exponents(const std::vector<BenchRecord> &records, int n_from) {
    std::vector<MeanTime> means = mean_times(records);
    std::vector<std::string> labels;
    for (const MeanTime &m : means) {
        if (std::find(labels.begin(), labels.end(), m.density) == labels.end()) {
            labels.push_back(m.density);
        }
    }
    std::vector<ExponentFit> fits;
    for (const std::string &label : labels) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (const MeanTime &m : means) {
            if (m.density != label || m.n < n_from) {
                continue;
            }
            double x = m.n, y = std::log2(m.seconds);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            count++;
        }
        ExponentFit f;
        f.density = label;
        f.points = count;
        if (count >= 2) {
            double denom = count * sxx - sx * sx;
            f.alpha = (count * sxy - sx * sy) / denom;
            f.log2_c = (sy - f.alpha * sx) / count;
        } else {
            f.alpha = std::nan("");
            f.log2_c = std::nan("");
        }
        fits.push_back(f);
    }
    return fits;
}

}  // namespace iqp
