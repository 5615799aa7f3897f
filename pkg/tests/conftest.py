from hypothesis import HealthCheck, settings

# Kernel warmup (jit compilation) can make the first example slow.
settings.register_profile(
    "ci",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("ci")
