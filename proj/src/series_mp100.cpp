#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "series_engine.hpp"

namespace besselhr::detail {

SeriesOut run_series_mp100(const SeriesJob& job)
{
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
    using C = boost::multiprecision::cpp_complex<100>;
    Engine<R, C> eng{100, boost::multiprecision::pow(R(10), -100)};
    return eng.run(job);
}

}  // namespace besselhr::detail
