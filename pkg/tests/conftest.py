from hypothesis import settings

# exact rational arithmetic makes per-example timing noisy
settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")
