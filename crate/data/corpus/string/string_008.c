// concatenate two strings
void concat(char *dst, const char *src)
{
    while (*dst)
        dst++;
    while ((*dst++ = *src++) != '\0')
        ;
}

int main()
{
    char s1[200], s2[100];
    scanf("%s %s", s1, s2);
    concat(s1, s2);
    printf("%s\n", s1);
    return 0;
}
