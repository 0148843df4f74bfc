// Copyright 2026 The CLMAT Authors
//
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

#ifndef CLMAT_RADIO_H_
#define CLMAT_RADIO_H_

namespace clmat {

// First-order radio cost per packet. Energies in Joules, distances in the
// graph's length units.
struct RadioModel {
  double tx_fixed = 50e-9;
  double tx_dist_coeff = 100e-12;
  int exponent = 2;
  double rx_cost = 50e-9;

  // Throws kInvalidConfig on negative coefficients or exponent not in {2, 4}.
  void Validate() const;

  double TxEnergy(double distance) const;
};

}  // namespace clmat

#endif  // CLMAT_RADIO_H_
