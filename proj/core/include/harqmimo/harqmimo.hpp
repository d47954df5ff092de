// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "harqmimo/asymptotic.hpp"
#include "harqmimo/dimension.hpp"
#include "harqmimo/errors.hpp"
#include "harqmimo/mcsim.hpp"
#include "harqmimo/model.hpp"
#include "harqmimo/philox.hpp"
#include "harqmimo/specfun.hpp"
#include "harqmimo/version.hpp"
