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

#include "iqpsim/engine.h"

namespace iqp {

AmplitudeResult amplitude_cut_reference(const RestrictedInstance &inst, const CutPlan &plan) {
    if (plan.num_free != inst.size()) {
        throw std::invalid_argument("amplitude_cut_reference: plan does not match instance size");
    }
    const int m = plan.cut_size();
    if (m > kMaxCutSize) {
        throw LimitError("amplitude_cut_reference: cut too large");
    }
    CycInt sum;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << m); a++) {
        auto set = [&](int j) { return int((a >> j) & 1); };
        int phi = 0;
        for (int j = 0; j < m; j++) {
            if (!set(j)) {
                continue;
            }
            phi += inst.eff_t[plan.cut[j]];
            for (int j2 = j + 1; j2 < m; j2++) {
                phi += 2 * inst.coupling(plan.cut[j], plan.cut[j2]) * set(j2);
            }
        }
        CycInt term = CycInt::omega_pow(phi);
        for (int s : plan.independent) {
            int e = inst.eff_t[s];
            for (int j = 0; j < m; j++) {
                e += 2 * inst.coupling(s, plan.cut[j]) * set(j);
            }
            term *= CycInt::one() + CycInt::omega_pow(e);
        }
        sum += term;
    }
    AmplitudeResult r;
    r.numerator = sum.times_omega_pow(inst.const_phase);
    r.sqrt2_scale = inst.sqrt2_scale;
    r.value = scale_to_complex(r.numerator, r.sqrt2_scale);
    r.term_count = plan.term_count();
    r.cut_size = m;
    return r;
}

}  // namespace iqp
