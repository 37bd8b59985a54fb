// Copyright 2026 The itaphon Authors
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

#ifndef ITAPHON_ITAPHON_H_
#define ITAPHON_ITAPHON_H_

#include "itaphon/convergence.h"
#include "itaphon/error.h"
#include "itaphon/harmonizer.h"
#include "itaphon/inventory.h"
#include "itaphon/lexicon.h"
#include "itaphon/reference_data.h"
#include "itaphon/report.h"
#include "itaphon/tabulator.h"
#include "itaphon/transcriber.h"
#include "itaphon/utf8.h"

#endif  // ITAPHON_ITAPHON_H_
