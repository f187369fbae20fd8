// Copyright 2026 The Authors.
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


#ifndef MATROID_TOR_MATROID_TOR_HPP
#define MATROID_TOR_MATROID_TOR_HPP

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/closed_forms.hpp"
#include "matroid_tor/corpus.hpp"
#include "matroid_tor/elem_set.hpp"
#include "matroid_tor/error.hpp"
#include "matroid_tor/exact_rank.hpp"
#include "matroid_tor/flat_lattice.hpp"
#include "matroid_tor/hochster.hpp"
#include "matroid_tor/io.hpp"
#include "matroid_tor/koszul.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/parallel.hpp"
#include "matroid_tor/polynomial.hpp"
#include "matroid_tor/squarefree.hpp"
#include "matroid_tor/verify.hpp"

#endif  // MATROID_TOR_MATROID_TOR_HPP
