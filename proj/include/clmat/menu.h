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

#ifndef CLMAT_MENU_H_
#define CLMAT_MENU_H_

#include <istream>
#include <ostream>

#include "clmat/selection.h"
#include "clmat/topology.h"

namespace clmat {

// Interactive session: 1 add vertex, 2 add edge, 3 display, 4 trees and
// metrics, 5 compare trees, 6 exit. Operation errors are printed and the loop
// continues. End of input behaves like 6. Returns the graph as built.
NetworkGraph RunMenu(std::istream& in, std::ostream& out,
                     const SelectConfig& config,
                     LinkMode mode = LinkMode::kUndirected);

}  // namespace clmat

#endif  // CLMAT_MENU_H_
