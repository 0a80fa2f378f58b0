/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGCONN_LOGCONN_HPP
#define LOGCONN_LOGCONN_HPP

#include <logconn/bundle.hpp>
#include <logconn/criterion.hpp>
#include <logconn/endalg.hpp>
#include <logconn/errors.hpp>
#include <logconn/io.hpp>
#include <logconn/matrix.hpp>
#include <logconn/obstruction.hpp>
#include <logconn/oneform.hpp>
#include <logconn/poly.hpp>
#include <logconn/scalar.hpp>
#include <logconn/synth.hpp>

#endif
