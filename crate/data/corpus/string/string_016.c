void concat(char *dst, const char *src)
{
    while (*dst)
        dst++;
    while ((*dst++ = *src++) != '\0')
        ;
}

int main()
{
    char first[200], second[100];
    scanf("%s %s", first, second);
    concat(first, second);
    printf("%s\n", first);
    return 0;
}
