// Copyright 2026 The qcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qcheb {

/// 2x2 matrix over a commutative ring (XsPoly or SLaurent here).
template <class T>
struct Mat2 {
    T a11{}, a12{}, a21{}, a22{};

    T det() const { return a11 * a22 - a12 * a21; }
    T trace() const { return a11 + a22; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return Mat2{l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                    l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }

    friend bool operator==(const Mat2& l, const Mat2& r) {
        return l.a11 == r.a11 && l.a12 == r.a12 && l.a21 == r.a21 && l.a22 == r.a22;
    }
};

template <class T>
Mat2<T> identity_mat2(const T& one) {
    return Mat2<T>{one, T{}, T{}, one};
}

}  // namespace qcheb
