// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evindep/evindep.h"

int evd_c_header_smoke(void) {
  const char* labels[] = {"a", "b"};
  evd_mass* m = NULL;
  evd_status s = evd_mass_vacuous(labels, 2, &m);
  if (s != EVD_OK) return 1;
  int bad = evd_mass_value(m, 3u) != 1.0;
  evd_mass_free(m);
  return bad;
}
