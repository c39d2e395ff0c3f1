"""
Domain layer - Business entities and interfaces
"""
