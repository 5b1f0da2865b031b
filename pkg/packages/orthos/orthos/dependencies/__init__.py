"""DI singletons and providers: CLI params, config and loaded resources."""
