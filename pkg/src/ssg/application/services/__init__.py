"""Operations on automaton groups, RN elements, germs and witnesses."""
