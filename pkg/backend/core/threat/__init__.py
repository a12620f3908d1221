"""
공격 모듈

duration 부풀리기 / RTS 범람 공격 프레임 생성
"""

from .attacks import next_attack_frame

__all__ = ['next_attack_frame']
