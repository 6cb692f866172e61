// Copyright 2026 The Pointer Suite Authors
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

// Hand-copied sequences from printed worked examples, shared by the unit
// tests and the acceptance binary.
#ifndef POINTER_SUITE_TESTS_FIXTURES_H_
#define POINTER_SUITE_TESTS_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace pointer_suite::fixtures {

// A PEN question with its printed answer.
inline constexpr std::string_view kPenLong =
    "xv ke vu7bh sb0fz xy5ih eo7sf ay7of xd3nj zs7bt eo1sf jn6yc xd5nj od3nk "
    "br2ny yc2pr ls5sg nv1zs sb5fz uy7vu sf1zv bh6ia sg5dg ux6oc zv4xd ya1yk "
    "br5ny wc4xy ke5fm jw1dx ny7sb wq2mm fz6eo nk2nv sf5zv pr3ya fz4eo yk0dk "
    "fm4br oc4wc nj0ls ih1uy di7fw mm2pq zv7xd of7wq nj4ls xv7gn ls6sg dx0ux "
    "vz7uc ah7od sg4dg sn2jw ae5ce ia7jn zw4ed bt5ay fm6br pq6kw ny3sb gn4ah "
    "ke0fm";
inline constexpr std::string_view kPenLongAnswer =
    "ke ls6sg ke0fm sg4dg br2ny sf5zv sb5fz eo1sf fm6br xd3nj nj4ls fz6eo "
    "zv7xd ny3sb";

// The small trap illustration: chain ab -> ab4fq -> fq0zz, yellows xy,
// wv7ql, xy5wv, doppelgangers xy2wv and wv5ql beside free greens.
inline constexpr std::string_view kPenSmall =
    "ab xy nb3ac xy2wv fq0zz xy5wv ab4fq wv7ql rt8gt ry4up ac3rt wv5ql";

inline constexpr std::string_view kPermA =
    "kp0ms gg0hy pk0tq go0ey mf0kp ms0jd hl0go vu0vu vl0gg bn0vl ar0pk tq0bn "
    "jd0hl hy0jm ey0oy oy0mf gy0do | ar0pk";
inline constexpr std::string_view kPermAAnswer =
    "hy0jm.24 gg0hy.20 vl0gg.12 bn0vl.6 tq0bn.2 pk0tq.1 ar0pk.0";

inline constexpr std::string_view kPermB =
    "vs0ep xv0tx me0xt xx0ds ds0re re0rm tx0tg sh0vs xt0bw pf0ss gh0sh ep0me "
    "bw0xv rm0gh ss0pf kh0of | xx0ds";
inline constexpr std::string_view kPermBAnswer =
    "tx0tg.60 xv0tx.55 bw0xv.40 xt0bw.36 me0xt.32 ep0me.21 vs0ep.18 sh0vs.10 "
    "gh0sh.4 rm0gh.0 re0rm.0 ds0re.0 xx0ds.0";

inline std::string GoldenPath(std::string_view name) {
  return std::string(POINTER_SUITE_GOLDEN_DIR) + "/" + std::string(name);
}

inline std::string ReadGolden(std::string_view name) {
  std::ifstream in(GoldenPath(name), std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace pointer_suite::fixtures

#endif  // POINTER_SUITE_TESTS_FIXTURES_H_
