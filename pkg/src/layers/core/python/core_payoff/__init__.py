from core_utils import (
    load_environment_variables,
)

load_environment_variables()
