// Copyright 2026 The bilincover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generates a trim-loss instance and compares the lower bounds reached by the
// two cut families.

#include <cstdio>

#include "bilincover/cutplane.hpp"
#include "bilincover/io.hpp"

int main() {
  using namespace bilincover;
  TrimLossGenParams params;
  params.seed = 7;
  params.n_finals = 5;
  params.n_patterns = 5;
  const TrimLossInstance t = gen_trimloss(params);
  std::printf("%s\n", write_instance(t).c_str());

  for (CutFamily family : {CutFamily::kUnboundedHull, CutFamily::kBoundedHull}) {
    const CutplaneResult res = run_cutting_plane(t, family);
    std::printf("%-9s lp_solves=%4d cuts=%4zu lower_bound=%.6f%s\n", to_string(family),
                res.log.lp_solves(), res.cuts.size(), res.log.final_lower_bound,
                res.log.terminated ? "" : " (cap)");
  }
  return 0;
}
