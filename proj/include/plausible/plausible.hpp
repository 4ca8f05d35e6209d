// Copyright 2026 The plausible Authors
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

#pragma once

// Everything except the command-line front end.

#include "plausible/axioms.hpp"
#include "plausible/bayes/construct.hpp"
#include "plausible/bayes/counterexample.hpp"
#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/dsep.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/bayes/random_network.hpp"
#include "plausible/bayes/reconstruct.hpp"
#include "plausible/bayes/soundness.hpp"
#include "plausible/conditioning.hpp"
#include "plausible/cps.hpp"
#include "plausible/demos.hpp"
#include "plausible/domain.hpp"
#include "plausible/domain_checks.hpp"
#include "plausible/errors.hpp"
#include "plausible/event.hpp"
#include "plausible/independence.hpp"
#include "plausible/io/measure_file.hpp"
#include "plausible/io/network_file.hpp"
#include "plausible/io/query.hpp"
#include "plausible/measures.hpp"
#include "plausible/random.hpp"
#include "plausible/rational.hpp"
#include "plausible/report.hpp"
#include "plausible/semigraphoid.hpp"
#include "plausible/worlds.hpp"
