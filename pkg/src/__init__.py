"""
G2 ACMS Package

G2 구조와 단위 벡터장 ξ가 유도하는 거의 접촉 계량 구조의 ∇Φ 계산, 이차 불변량,
Chinea-Gonzalez 클래스 판정, 정리 감사를 수행하는 도구
"""

__version__ = "1.0.0"
__author__ = "G2 ACMS Team"
