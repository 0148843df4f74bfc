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

#include "clmat/radio.h"

#include <cmath>

#include "clmat/error.h"

namespace clmat {

void RadioModel::Validate() const {
  if (!(tx_fixed >= 0.0) || !(tx_dist_coeff >= 0.0) || !(rx_cost >= 0.0)) {
    throw Error(ErrorKind::kInvalidConfig,
                "radio coefficients must be non-negative");
  }
  if (exponent != 2 && exponent != 4) {
    throw Error(ErrorKind::kInvalidConfig, "radio exponent must be 2 or 4");
  }
}

double RadioModel::TxEnergy(double distance) const {
  const double d2 = distance * distance;
  return tx_fixed + tx_dist_coeff * (exponent == 4 ? d2 * d2 : d2);
}

}  // namespace clmat
