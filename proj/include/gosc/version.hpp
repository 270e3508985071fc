#ifndef GOSC_VERSION_HPP
#define GOSC_VERSION_HPP

#define GOSC_VERSION_STRING "1.0.0"

#endif
